use proptest::prelude::*;
use rank2_cluster::geometry::{QPoint, Region};
use rank2_cluster::laurent::{GVector, LaurentPoly};
use rank2_cluster::numeric::{Discriminant, QuadNum, Rational};
use rank2_cluster::regions::{dominance_region, support_region};
use rank2_cluster::AlgebraParams;

fn params() -> impl Strategy<Value = AlgebraParams> {
    prop::sample::select(vec![(2, 2), (3, 2), (2, 3), (1, 4), (1, 5), (3, 3)])
        .prop_map(|(b, c)| AlgebraParams::new(b, c).unwrap())
}

fn quad() -> impl Strategy<Value = QuadNum> {
    (-50i64..50, 1i64..9, -50i64..50, 1i64..9).prop_map(|(a, b, c, d)| {
        QuadNum::new(Rational::new(a.into(), b.into()), Rational::new(c.into(), d.into()), Discriminant::new(12).unwrap())
    })
}

proptest! {
    #[test]
    fn quadnum_roundtrip(x in quad()) {
        let s = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<QuadNum>(&s).unwrap(), x);
    }

    #[test]
    fn laurent_roundtrip(terms in prop::collection::vec((-6i64..6, -6i64..6, -20i64..20), 0..12)) {
        let p: LaurentPoly = LaurentPoly::from_terms(terms.into_iter().map(|(a, b, c)| (a, b, c.into())));
        let s = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
    }

    #[test]
    fn region_roundtrip(p in params(), l0 in -6i64..=6, l1 in -6i64..=6) {
        let l = GVector::new(l0, l1);
        for region in [dominance_region(&p, l).unwrap(), support_region(&p, l).unwrap()] {
            let s = serde_json::to_string(&region).unwrap();
            let back: Region = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(&back, &region);
            // membership survives the round trip
            for g in region.lattice_points(l, &p) {
                prop_assert!(back.contains_gvector(g));
            }
        }
    }

    #[test]
    fn hull_of_vertices_reproduces_region(p in params(), l0 in 0i64..=6, l1 in -14i64..=0) {
        let l = GVector::new(l0, l1);
        let region = dominance_region(&p, l).unwrap();
        let again = Region::from_vertices(region.vertices()).unwrap();
        prop_assert!(again.same_vertices(&region));
    }
}

#[test]
fn rejects_malformed_documents() {
    assert!(serde_json::from_str::<LaurentPoly>(r#"[[0,0,"1"],[0,0,"2"]]"#).is_err());
    assert!(serde_json::from_str::<LaurentPoly>(r#"[[0,0,"0"]]"#).is_err());
    let p = AlgebraParams::new(2, 2).unwrap();
    let mut doc: serde_json::Value = serde_json::to_value(dominance_region(&p, GVector::new(3, -3)).unwrap()).unwrap();
    doc["kind"] = "polygon".into();
    assert!(serde_json::from_value::<Region>(doc).is_err());
    let pt = QPoint::from_ints(1, 2, Discriminant::RATIONAL);
    assert_eq!(serde_json::from_str::<QPoint>(&serde_json::to_string(&pt).unwrap()).unwrap(), pt);
}
