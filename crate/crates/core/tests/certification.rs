mod common;

use std::sync::OnceLock;

use common::*;
use rand::Rng;
use vcrit_core::certify::{certified_family, certify_4colourable, verify_certificate, verify_certificate_text, Catalog, Certificate};
use vcrit_core::colour::Colouring;
use vcrit_core::detect::Embedding;
use vcrit_core::generate::oracle_enumerate;
use vcrit_core::{Error, Graph};

fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| Catalog::from_graphs("m", &oracle_enumerate(5, &certified_family(), 9).unwrap()).unwrap())
}

fn family() -> Vec<Graph> {
    vec![named("p6"), named("bull")]
}

#[test]
fn verdicts_match_exact_colourability() {
    let mut r = rng(11);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..150 {
        let n = r.gen_range(4..=9);
        let p = r.gen_range(0.3..0.95);
        let g = random_free_graph(&mut r, n, p, &family());
        let truth = brute_colourable(&g, 4);
        match certify_4colourable(&g, catalog()) {
            Ok(cert) => {
                assert_eq!(cert.is_four_colourable(), truth, "{g}");
                assert!(verify_certificate(&g, &cert));
                assert!(verify_certificate_text(&g, &cert.to_text(&g)));
                if truth {
                    yes += 1;
                } else {
                    no += 1;
                }
            }
            Err(Error::IncompleteCatalog) => panic!("{g} has no catalog member yet is not 4-colourable"),
            Err(e) => panic!("{g}: {e}"),
        }
    }
    assert!(yes > 10 && no > 10, "yes={yes} no={no}");
}

#[test]
fn forged_certificates_are_rejected() {
    let g = named("c5_join_k2");
    let cert = certify_4colourable(&g, catalog()).unwrap();
    let Certificate::NotFourColourable { witness, member, embedding } = cert.clone() else { panic!() };
    assert!(verify_certificate(&g, &cert));

    let mut map = embedding.map.clone();
    map.swap(0, 1);
    let moved = Certificate::NotFourColourable { witness: witness.clone(), member: member.clone(), embedding: Embedding { map } };
    let k4 = named("k4");
    let small = Certificate::NotFourColourable { witness: witness.clone(), member: Box::new(k4), embedding: Embedding { map: vec![0, 2, 5, 6] } };
    let fake = Certificate::FourColourable(Colouring { colours: vec![0, 1, 0, 1, 2, 3, 3] });
    let wide = Certificate::FourColourable(Colouring { colours: (0..7).collect() });
    for bad in [&moved, &small, &fake, &wide] {
        assert!(!verify_certificate(&g, bad), "{bad:?}");
        assert!(!verify_certificate_text(&g, &bad.to_text(&g)));
    }

    let c5 = named("c5");
    let ok = certify_4colourable(&c5, catalog()).unwrap();
    assert!(!verify_certificate_text(&g, &ok.to_text(&c5)));
    let text = ok.to_text(&c5);
    for (i, _) in text.char_indices() {
        let mut bytes = text.clone().into_bytes();
        bytes[i] ^= 0x01;
        if let Ok(s) = String::from_utf8(bytes) {
            assert!(!verify_certificate_text(&c5, &s), "byte {i}");
        }
    }
    assert!(!verify_certificate_text(&c5, &text[..text.len() - 1]));
}

#[test]
fn inputs_outside_the_class_are_refused() {
    assert!(matches!(certify_4colourable(&named("p6"), catalog()), Err(Error::NotFamilyFree(_))));
    assert!(matches!(certify_4colourable(&named("k5"), &Catalog::new()), Err(Error::InvalidParameter(_))));
    let only_k5 = Catalog::from_graphs("m", &[named("k5")]).unwrap();
    assert!(matches!(certify_4colourable(&named("co_c9"), &only_k5), Err(Error::IncompleteCatalog)));
}

#[test]
fn catalog_text_round_trips_and_rejects_bad_members() {
    let text = catalog().to_text();
    let back = Catalog::read_from(text.as_bytes()).unwrap();
    assert_eq!(back.len(), catalog().len());
    back.check().unwrap();
    let mut c = Catalog::new();
    assert!(c.insert("k4", named("k4")).is_err());
    assert!(c.insert("p6ish", named("c5_join_k2").disjoint_union(&named("p6")).unwrap()).is_err());
    c.insert("a", named("k5")).unwrap();
    assert!(c.insert("b", named("k5")).is_err());
    assert!(c.insert("a", named("c5_join_k2")).is_err());
    assert!(c.insert("has space", named("c5_join_k2")).is_err());
}
