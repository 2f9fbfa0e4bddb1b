use onetwothree::generate::gnp;
use onetwothree_cli::format::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use proptest::prelude::*;

proptest! {
    #[test]
    fn edge_list_round_trip(n in 0usize..30, p in 0.0..1.0f64, seed in any::<u64>()) {
        let g = gnp(n, p, seed).unwrap();
        let doc = parse_edge_list(&emit_edge_list(&g)).unwrap();
        prop_assert_eq!(&doc.graph, &g);
        let again = parse_edge_list(&emit_edge_list(&doc.graph)).unwrap();
        prop_assert_eq!(again, doc);
    }

    #[test]
    fn graph6_round_trip(n in 0usize..70, p in 0.0..1.0f64, seed in any::<u64>()) {
        let g = gnp(n, p, seed).unwrap();
        let text = emit_graph6(&g);
        prop_assert!(text.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&text).unwrap().graph, g);
    }

    #[test]
    fn edge_order_does_not_matter(n in 2usize..15, seed in any::<u64>()) {
        let g = gnp(n, 0.4, seed).unwrap();
        let mut lines: Vec<String> = g.edges().iter().map(|e| format!("{} {}", e.hi(), e.lo())).collect();
        lines.reverse();
        let text = format!("{} {}\n{}", n, g.m(), lines.join("\n"));
        prop_assert_eq!(parse_edge_list(&text).unwrap().graph, g);
    }
}
