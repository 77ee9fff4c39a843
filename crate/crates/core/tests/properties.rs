use proptest::prelude::*;

use tetra::classify::classify;
use tetra::export::ExportDocument;
use tetra::io::parse_matrix;
use tetra::matrix::Matrix4;
use tetra::oracle;
use tetra::polytrope::polytrope_of;
use tetra::{kleene_closure, KleeneMatrix};

fn kleene(range: i64) -> impl Strategy<Value = KleeneMatrix> {
    proptest::array::uniform16(-range..=0i64).prop_map(|v| {
        let mut rows = [[0i64; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    rows[i][j] = v[4 * i + j];
                }
            }
        }
        kleene_closure(&Matrix4::from_ints(rows)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn text_form_parses_back(a in kleene(30)) {
        prop_assert_eq!(parse_matrix(&a.matrix().to_string()).unwrap(), *a.matrix());
    }

    #[test]
    fn oracle_agrees_with_engine(a in kleene(30)) {
        let report = oracle::cross_validate(&a);
        prop_assert!(report.ok(), "{:?}", report.mismatches);
    }

    #[test]
    fn classification_survives_transpose_and_relabeling(a in kleene(40), perm in Just([0usize, 1, 2, 3]).prop_shuffle()) {
        let base = classify(&a).ok().map(|v| v.class_id);
        prop_assert_eq!(classify(&a.transpose()).ok().map(|v| v.class_id), base);
        let p: [usize; 4] = [perm[0], perm[1], perm[2], perm[3]];
        prop_assert_eq!(classify(&a.conjugate(p)).ok().map(|v| v.class_id), base);
    }

    #[test]
    fn export_round_trip(a in kleene(30)) {
        let doc = ExportDocument::of(&a).unwrap();
        let back = ExportDocument::from_json(&doc.to_json()).unwrap();
        prop_assert_eq!(&back, &doc);
        if let Ok(p) = polytrope_of(&a) {
            prop_assert_eq!(back.polytrope().unwrap(), p);
        }
    }
}
