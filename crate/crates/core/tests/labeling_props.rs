use l21span::generate::gnp;
use l21span::{is_valid_labeling, Instance, PartialLabeling, VertexSet};
use proptest::prelude::*;

fn subset(n: usize, mask: u64) -> VertexSet {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

fn labeling_on(y: &VertexSet, labels: &[u32]) -> PartialLabeling {
    y.iter().zip(labels.iter().copied()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn classical_condition(
        n in 1usize..=7,
        p in 0.0f64..=1.0,
        seed in any::<u64>(),
        labels in prop::collection::vec(0u32..8, 7),
    ) {
        let g = gnp(n, p, seed).unwrap();
        let c: PartialLabeling = (0..n).map(|v| (v, labels[v])).collect();
        let k = c.span().unwrap() + 1;
        let mut expect = true;
        for u in 0..n {
            for v in u + 1..n {
                let gap = labels[u].abs_diff(labels[v]);
                if g.is_adjacent(u, v) && gap < 2 {
                    expect = false;
                }
                if !g.is_adjacent(u, v) && g.dist_le2(u, v).unwrap() && gap == 0 {
                    expect = false;
                }
            }
        }
        prop_assert_eq!(is_valid_labeling(&Instance::whole(&g), &c, k), expect);
    }

    #[test]
    fn reversal_swaps_boundaries(
        n in 1usize..=7,
        p in 0.0f64..=1.0,
        seed in any::<u64>(),
        masks in any::<(u64, u64, u64)>(),
        labels in prop::collection::vec(0u32..6, 7),
        k in 1u32..=6,
    ) {
        let g = gnp(n, p, seed).unwrap();
        let (y, z, m) = (subset(n, masks.0), subset(n, masks.1), subset(n, masks.2));
        let c = labeling_on(&y, &labels.iter().map(|l| l % k).collect::<Vec<_>>());
        let inst = Instance::new(&g, y, z, m).unwrap();
        let rev = c.reverse(k).unwrap();
        prop_assert_eq!(
            is_valid_labeling(&inst, &c, k),
            is_valid_labeling(&inst.swapped(), &rev, k)
        );
    }

    #[test]
    fn monotone_in_k_without_top_constraint(
        n in 1usize..=7,
        p in 0.0f64..=1.0,
        seed in any::<u64>(),
        masks in any::<(u64, u64)>(),
        labels in prop::collection::vec(0u32..6, 7),
        k in 1u32..=8,
    ) {
        let g = gnp(n, p, seed).unwrap();
        let (y, z) = (subset(n, masks.0), subset(n, masks.1));
        let c = labeling_on(&y, &labels);
        let inst = Instance::new(&g, y, z, VertexSet::empty()).unwrap();
        if is_valid_labeling(&inst, &c, k) {
            prop_assert!(is_valid_labeling(&inst, &c, k + 1));
        }
    }

    #[test]
    fn restriction_stays_valid(
        n in 1usize..=7,
        p in 0.0f64..=1.0,
        seed in any::<u64>(),
        masks in any::<(u64, u64, u64, u64)>(),
        labels in prop::collection::vec(0u32..6, 7),
        k in 1u32..=6,
    ) {
        let g = gnp(n, p, seed).unwrap();
        let (y, z, m) = (subset(n, masks.0), subset(n, masks.1), subset(n, masks.2));
        let c = labeling_on(&y, &labels);
        let inst = Instance::new(&g, y, z, m).unwrap();
        if is_valid_labeling(&inst, &c, k) {
            let keep = y.intersection(&subset(n, masks.3));
            let sub = Instance::new(&g, keep, z, m).unwrap();
            prop_assert!(is_valid_labeling(&sub, &c.restrict(&keep), k));
        }
    }
}
