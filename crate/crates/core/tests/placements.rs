mod common;

use std::collections::BTreeSet;

use chained_rooks::counting::{count_max_circular, count_max_linear, factorial, BigCount};
use chained_rooks::placements::{
    build_chain_graph, enumerate_matchings, enumerate_maximum_placements, enumerate_placements, from_matching,
    from_one_line, matrices_to_placement, placement_to_matrices, to_matching, to_one_line, validate_one_line,
    validate_placement, ChainEdge, ChainMatching, ChainedPermutation, OneLine, RookPlacement,
};
use chained_rooks::{BoardSpec, Error, Matrix, Shape, Square};

fn boards(max_n: usize, max_k: usize) -> impl Iterator<Item = BoardSpec> {
    [Shape::Linear, Shape::Circular].into_iter().flat_map(move |s| {
        (1..=max_n).flat_map(move |n| (1..=max_k).map(move |k| BoardSpec::new(s, n, k).unwrap()))
    })
}

fn count_max(b: &BoardSpec) -> BigCount {
    match b.shape() {
        Shape::Linear => count_max_linear(b.n(), b.k()).unwrap(),
        Shape::Circular => count_max_circular(b.n(), b.k()).unwrap(),
    }
}

#[test]
fn bijection_suite() {
    for b in boards(3, 4) {
        let all = enumerate_maximum_placements(&b);
        assert_eq!(BigCount::from(all.len()), count_max(&b), "{b}");
        for p in &all {
            let cp = placement_to_matrices(p).unwrap();
            assert!(cp.validate().is_valid(), "{b}");
            assert_eq!(&matrices_to_placement(&cp), p);
            let o = to_one_line(&cp);
            assert!(validate_one_line(&o).is_valid(), "{o}");
            assert_eq!(from_one_line(&o).unwrap(), cp);
            let m = to_matching(&cp);
            assert!(m.validate().is_valid(), "{b}");
            assert_eq!(from_matching(&m).unwrap(), cp);
        }
    }
}

fn all_blocks(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    let cells = n * k;
    let total = (n + 1).pow(cells as u32);
    (0..total)
        .map(|mut code| {
            let mut flat = Vec::with_capacity(cells);
            for _ in 0..cells {
                flat.push(code % (n + 1));
                code /= n + 1;
            }
            flat.chunks(n).map(|c| c.to_vec()).collect()
        })
        .collect()
}

#[test]
fn one_line_validator_is_complete() {
    for b in boards(2, 3) {
        let valid: BTreeSet<String> = all_blocks(b.n(), b.k())
            .into_iter()
            .map(|blocks| OneLine::new(b, blocks).unwrap())
            .filter(|o| validate_one_line(o).is_valid())
            .map(|o| o.to_string())
            .collect();
        let image: BTreeSet<String> = enumerate_maximum_placements(&b)
            .iter()
            .map(|p| to_one_line(&placement_to_matrices(p).unwrap()).to_string())
            .collect();
        assert_eq!(valid, image, "{b}");
    }
}

#[test]
fn matching_counts() {
    let extra = [BoardSpec::linear(3, 2), BoardSpec::circular(3, 2), BoardSpec::linear(3, 3), BoardSpec::circular(3, 3)];
    for b in boards(2, 4).chain(extra.into_iter().map(Result::unwrap)) {
        let found = enumerate_matchings(&build_chain_graph(&b));
        assert_eq!(BigCount::from(found.len()), count_max(&b), "{b}");
        let from_perms: BTreeSet<_> = enumerate_maximum_placements(&b)
            .iter()
            .map(|p| to_matching(&placement_to_matrices(p).unwrap()).edges().clone())
            .collect();
        assert_eq!(found.iter().map(|m| m.edges().clone()).collect::<BTreeSet<_>>(), from_perms, "{b}");
    }
}

#[test]
fn chain_graph_shape() {
    for b in boards(3, 4) {
        let g = build_chain_graph(&b);
        let rows = if b.is_circular() { b.k() } else { b.k() + 1 };
        assert_eq!(g.vertices().len(), rows * b.n(), "{b}");
        assert_eq!(g.edges().len(), b.k() * b.n() * b.n(), "{b}");
    }
    // one board chained to itself: diagonal squares are loops
    let b = BoardSpec::circular(2, 1).unwrap();
    let loops = build_chain_graph(&b).edges().iter().filter(|e| e.is_loop(&b)).count();
    assert_eq!(loops, 2);
}

#[test]
fn classical_cardinalities() {
    for n in 1..=6 {
        let b = BoardSpec::linear(n, 1).unwrap();
        assert_eq!(BigCount::from(enumerate_maximum_placements(&b).len()), factorial(n as u64));
    }
    for n in 1..=3 {
        let b = BoardSpec::circular(n, 4).unwrap();
        assert_eq!(BigCount::from(enumerate_maximum_placements(&b).len()), factorial(2 * n as u64));
    }
}

#[test]
fn placements_are_sorted_and_valid() {
    let b = BoardSpec::circular(2, 3).unwrap();
    for m in 0..=b.max_rooks() {
        let all = enumerate_placements(&b, m).unwrap();
        assert_eq!(all.len() as u64, common::naive_rook_count(true, 2, 3, m));
        assert!(all.iter().all(validate_placement));
        assert!(all.windows(2).all(|w| w[0].squares() < w[1].squares()));
    }
}

#[test]
fn attacking_placements_are_reported() {
    let b = BoardSpec::linear(2, 2).unwrap();
    let p = RookPlacement::new(b, vec![Square::new(1, 1, 1), Square::new(1, 1, 2)]).unwrap();
    assert!(!validate_placement(&p));
    assert_eq!(p.validate().diagnostics.len(), 1);
    let b = BoardSpec::circular(2, 1).unwrap();
    let p = RookPlacement::new(b, vec![Square::new(1, 1, 1)]).unwrap();
    assert!(!p.validate().is_valid());
    assert!(RookPlacement::new(b, vec![Square::new(1, 3, 1)]).is_err());
}

#[test]
fn worked_one_lines() {
    let o: OneLine = "0200-3104-3000-3420-0004-1032-".parse().unwrap();
    assert_eq!(*o.board(), BoardSpec::circular(4, 6).unwrap());
    assert!(validate_one_line(&o).is_valid());
    let o: OneLine = "30502-04200-00045-31200".parse().unwrap();
    assert_eq!(*o.board(), BoardSpec::linear(5, 4).unwrap());
    let cp = from_one_line(&o).unwrap();
    assert_eq!(cp.to_placement().len(), 10);
    assert_eq!(to_one_line(&cp).to_string(), "30502-04200-00045-31200");
}

#[test]
fn invalid_one_lines() {
    let b = BoardSpec::circular(2, 2).unwrap();
    // repeated column in a block
    assert!(!validate_one_line(&OneLine::new(b, vec![vec![1, 1], vec![0, 0]]).unwrap()).is_valid());
    // too few rooks
    assert!(!validate_one_line(&OneLine::new(b, vec![vec![1, 0], vec![0, 0]]).unwrap()).is_valid());
    // row 1 of board 1 is used, so column 1 of board 2 must stay empty
    assert!(!validate_one_line(&OneLine::new(b, vec![vec![1, 0], vec![0, 1]]).unwrap()).is_valid());
    assert!(matches!(OneLine::new(b, vec![vec![1, 0]]), Err(Error::Domain(_))));
    assert!("12-3".parse::<OneLine>().is_err());
    assert!("1a-00".parse::<OneLine>().is_err());
    assert!(OneLine::parse_for(&b, "10-02").is_err());
}

#[test]
fn wide_one_lines_use_commas() {
    let b = BoardSpec::linear(10, 1).unwrap();
    let rows: Vec<Vec<i8>> = (0..10).map(|i| (0..10).map(|j| i8::from(j == 9 - i)).collect()).collect();
    let cp = ChainedPermutation::new(b, vec![Matrix::from_rows(&rows).unwrap()]).unwrap();
    let s = to_one_line(&cp).to_string();
    assert_eq!(s, "10,9,8,7,6,5,4,3,2,1");
    let back: OneLine = s.parse().unwrap();
    assert_eq!(from_one_line(&back).unwrap(), cp);
}

#[test]
fn matching_edges_and_errors() {
    let e: ChainEdge = "2:3:1".parse().unwrap();
    assert_eq!(e, ChainEdge::new(2, 3, 1));
    assert_eq!(e.to_string(), "2:3:1");
    assert!("2:3".parse::<ChainEdge>().is_err());
    assert!("2:x:1".parse::<ChainEdge>().is_err());
    let b = BoardSpec::linear(2, 1).unwrap();
    let pair = [ChainEdge::new(1, 1, 1), ChainEdge::new(1, 1, 2)];
    assert!(matches!(ChainMatching::new(b, pair), Err(Error::Invalid(_))));
    let m = ChainMatching::new_unchecked(b, pair).unwrap();
    assert!(!m.validate().is_valid());
}
