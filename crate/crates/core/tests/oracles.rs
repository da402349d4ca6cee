mod common;

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nacrig::canon::{canonical_form, canonical_form_capped, CanonicalCode};
use nacrig::fixtures;
use nacrig::formats::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use nacrig::graph::{connected_components, triangles};
use nacrig::laman::{apply_henneberg, enumerate_laman, henneberg_moves, is_laman};
use nacrig::nac::{enumerate_nac, has_nac, is_nac};
use nacrig::structure::{
    coloring_from_edge_cut, coloring_from_independent_cut, coloring_from_triangle_free_vertex,
    delta_classes, find_connecting_edge_cut, find_independent_cut, vertex_without_triangle,
};
use nacrig::Graph;

use common::*;

#[test]
fn graph6_decodes_by_hand() {
    // second decoder: bits of each byte minus 63, column order over i < j
    fn decode(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b: Vec<u8> = s.bytes().map(|c| c - 63).collect();
        let n = b[0] as usize;
        let bits: Vec<bool> = b[1..].iter().flat_map(|&x| (0..6).rev().map(move |k| x >> k & 1 == 1)).collect();
        let mut out = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bits[k] {
                    out.push((i, j));
                }
                k += 1;
            }
        }
        out.sort();
        (n, out)
    }
    for s in ["C~", "Cr", "Cl", "DQc", "E?~o", "Fs\\zw"] {
        let g = parse_graph6(s).unwrap();
        let (n, pairs) = decode(s);
        assert_eq!(g.vertex_count(), n, "{s}");
        let got: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        assert_eq!(got, pairs, "{s}");
    }
}

#[test]
fn fig9_edge_list() {
    let text = "a b\nb c\na c\nd e\nd f\ne f\na d\nc f\nb e\nb g\ng e\n";
    let g = parse_edge_list(text).unwrap();
    assert_eq!(g.graph.vertex_count(), 7);
    assert_eq!(g.graph.edge_count(), 11);
    assert_eq!(g.graph, fixtures::get("FIG9").graph);
}

#[test]
fn format_round_trips() {
    for name in fixtures::fixture_names() {
        let g = fixtures::get(name);
        assert_eq!(parse_graph6(&to_graph6(&g.graph)).unwrap(), g.graph, "{name}");
        let back = parse_edge_list(&to_edge_list(&g)).unwrap();
        assert_eq!(back.graph.edge_count(), g.graph.edge_count());
        for e in g.graph.edges() {
            assert!(back.edge_between(g.name(e.u), g.name(e.v)).is_some(), "{name}");
        }
    }
}

#[test]
fn components_examples() {
    let path = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    assert_eq!(connected_components(&path).blocks(), &[vec![0, 1, 2]]);
    assert_eq!(connected_components(&Graph::empty(3)).blocks(), &[vec![0], vec![1], vec![2]]);
    let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
    assert_eq!(connected_components(&two).blocks(), &[vec![0, 1], vec![2, 3]]);
}

#[test]
fn triangles_match_triple_scan() {
    for n in 0..=5 {
        for g in all_graphs(n) {
            let mut scan = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    for c in b + 1..n {
                        if g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c) {
                            scan.push([a, b, c]);
                        }
                    }
                }
            }
            assert_eq!(triangles(&g), scan);
        }
    }
    assert_eq!(triangles(&Graph::complete(4)).len(), 4);
    assert!(triangles(&fixtures::get("C4").graph).is_empty());
    let p = fixtures::get("PRISM");
    let named: Vec<String> = triangles(&p.graph)
        .iter()
        .map(|t| t.iter().map(|&v| p.name(v)).collect())
        .collect();
    assert_eq!(named, vec!["abc", "def"]);
}

#[test]
fn canonical_codes_decide_isomorphism() {
    for n in 1..=6 {
        let mut reps: BTreeMap<CanonicalCode, Graph> = BTreeMap::new();
        for g in all_graphs(n) {
            let code = canonical_form(&g).unwrap();
            match reps.get(&code) {
                Some(r) => assert!(brute_isomorphic(&g, r), "{g:?} vs {r:?}"),
                None => {
                    reps.insert(code, g);
                }
            }
        }
        let list: Vec<&Graph> = reps.values().collect();
        for i in 0..list.len() {
            for j in i + 1..list.len() {
                assert!(!brute_isomorphic(list[i], list[j]));
            }
        }
        let expected = [1, 2, 4, 11, 34, 156][n - 1];
        assert_eq!(reps.len(), expected, "n={n}");
    }
}

#[test]
fn canonical_codes_invariant_under_permutation() {
    for n in 1..=6 {
        let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..5 {
            let m = rng.gen_range(0..=n * (n - 1) / 2);
            let g = random_graph(&mut rng, n, m);
            let code = canonical_form(&g).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            loop {
                assert_eq!(canonical_form(&g.permute(&perm)).unwrap(), code);
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 7..=10 {
        let m = rng.gen_range(n..=2 * n);
        let g = random_graph(&mut rng, n, m);
        let code = canonical_form(&g).unwrap();
        for _ in 0..100 {
            let mut perm: Vec<usize> = (0..n).collect();
            rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
            assert_eq!(canonical_form(&g.permute(&perm)).unwrap(), code);
        }
    }
}

#[test]
fn fig8_graphs_differ() {
    let l = fixtures::get("FIG8L").graph;
    let r = fixtures::get("FIG8R").graph;
    assert!(!brute_isomorphic(&l, &r));
    assert_ne!(canonical_form(&l).unwrap(), canonical_form(&r).unwrap());
}

#[test]
fn nac_enumeration_matches_oracle_on_fixtures() {
    for name in fixtures::fixture_names() {
        let g = fixtures::get(name).graph;
        if g.edge_count() > 16 {
            continue;
        }
        let got: BTreeSet<u64> = enumerate_nac(&g, false).iter().map(|n| red_mask(n.coloring())).collect();
        assert_eq!(got, brute_nac_masks(&g), "{name}");
    }
}

#[test]
fn up_to_swap_keeps_one_of_each_pair() {
    for name in ["C4", "PRISM", "K23", "FIG9", "FIG12"] {
        let g = fixtures::get(name).graph;
        let all: BTreeSet<u64> = enumerate_nac(&g, false).iter().map(|n| red_mask(n.coloring())).collect();
        let half: Vec<u64> = enumerate_nac(&g, true).iter().map(|n| red_mask(n.coloring())).collect();
        assert_eq!(half.len() * 2, all.len(), "{name}");
        let full = (1u64 << g.edge_count()) - 1;
        let rebuilt: BTreeSet<u64> = half.iter().flat_map(|&m| [m, full & !m]).collect();
        assert_eq!(rebuilt, all, "{name}");
    }
}

#[test]
fn nac_examples() {
    assert!(has_nac(&fixtures::get("PRISM").graph));
    assert!(!has_nac(&Graph::complete(4)));
    assert!(has_nac(&fixtures::get("FIG12").graph));
    assert!(enumerate_nac(&Graph::complete(4), false).is_empty());
}

#[test]
fn delta_classes_match_closure() {
    let check = |g: &Graph| {
        let mut got: Vec<Vec<usize>> = delta_classes(g).classes().to_vec();
        got.sort();
        assert_eq!(got, closure_classes(g), "{g:?}");
    };
    for n in 0..=5 {
        all_graphs(n).for_each(|g| check(&g));
    }
    graphs_up_to_iso(6).iter().for_each(check);
}

#[test]
fn colorings_are_constant_on_classes() {
    for name in fixtures::fixture_names() {
        let g = fixtures::get(name).graph;
        let classes = delta_classes(&g);
        for nac in enumerate_nac(&g, false) {
            for class in classes.classes() {
                assert!(class.iter().all(|&e| nac.color(e) == nac.color(class[0])), "{name}");
            }
        }
    }
}

#[test]
fn constructive_witnesses_are_nac() {
    let mut graphs: Vec<Graph> = fixtures::fixture_names().into_iter().map(|n| fixtures::get(n).graph).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    for _ in 0..1000 {
        let n = rng.gen_range(3..=8);
        let extra = rng.gen_range(0..=n);
        graphs.push(random_connected_graph(&mut rng, n, extra));
    }
    let mut hits = [0usize; 3];
    for g in &graphs {
        if !g.is_connected() || g.edge_count() < 2 {
            continue;
        }
        if let Some(cut) = find_independent_cut(g, 4) {
            let c = coloring_from_independent_cut(g, cut).unwrap();
            assert!(is_nac(g, c.coloring()).unwrap().is_nac());
            hits[0] += 1;
        }
        if let Some(v) = vertex_without_triangle(g) {
            let c = coloring_from_triangle_free_vertex(g, v).unwrap();
            assert!(is_nac(g, c.coloring()).unwrap().is_nac());
            hits[1] += 1;
        }
        if let Some(cut) = find_connecting_edge_cut(g) {
            let c = coloring_from_edge_cut(g, &cut).unwrap();
            assert!(is_nac(g, c.coloring()).unwrap().is_nac());
            hits[2] += 1;
        }
    }
    assert!(hits.iter().all(|&h| h > 50), "{hits:?}");
}

#[test]
fn independent_cut_is_minimal() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(4..=8);
        let extra = rng.gen_range(0..=n);
        let g = random_connected_graph(&mut rng, n, extra);
        if let Some(cut) = find_independent_cut(&g, 4) {
            for v in nacrig::graph::members(cut) {
                let smaller = cut & !(1u64 << v);
                assert!(smaller == 0 || g.components_without(smaller).len() < 2);
            }
        }
    }
}

#[test]
fn laman_counts_match_filter() {
    for n in 3..=6 {
        let filtered: BTreeSet<CanonicalCode> = all_graphs(n)
            .filter(brute_is_laman)
            .map(|g| canonical_form_capped(&g, n).unwrap())
            .collect();
        let codes: BTreeSet<CanonicalCode> = enumerate_laman(n).unwrap().into_iter().collect();
        assert_eq!(codes, filtered, "n={n}");
    }
    let six = enumerate_laman(6).unwrap();
    for name in ["PRISM", "K33"] {
        let g = fixtures::get(name).graph;
        assert!(is_laman(&g));
        assert!(six.contains(&canonical_form(&g).unwrap()), "{name}");
    }
}

#[test]
fn every_level_member_has_a_parent() {
    for n in 4..=7 {
        let below = enumerate_laman(n - 1).unwrap();
        let reachable: BTreeSet<CanonicalCode> = below
            .iter()
            .flat_map(|c| {
                let g = c.to_graph();
                henneberg_moves(&g)
                    .into_iter()
                    .map(move |m| canonical_form(&apply_henneberg(&g, m).unwrap()).unwrap())
            })
            .collect();
        for code in enumerate_laman(n).unwrap() {
            assert!(reachable.contains(&code), "n={n}: {code}");
        }
    }
}

#[test]
fn prism_reached_from_an_edge() {
    // walk down levels to find a parent chain, then replay it on labeled graphs
    let target = canonical_form(&fixtures::get("PRISM").graph).unwrap();
    let mut chain = vec![target];
    for n in (3..=6).rev() {
        let child = chain.last().unwrap().clone();
        let parent = enumerate_laman(n - 1)
            .unwrap()
            .into_iter()
            .find(|c| {
                let g = c.to_graph();
                henneberg_moves(&g)
                    .into_iter()
                    .any(|m| canonical_form(&apply_henneberg(&g, m).unwrap()).unwrap() == child)
            })
            .unwrap();
        chain.push(parent);
    }
    let mut g = Graph::new(2, [(0, 1)]).unwrap();
    for want in chain.iter().rev().skip(1) {
        let m = henneberg_moves(&g)
            .into_iter()
            .find(|&m| canonical_form(&apply_henneberg(&g, m).unwrap()).unwrap() == *want)
            .unwrap();
        g = apply_henneberg(&g, m).unwrap();
    }
    assert!(brute_isomorphic(&g, &fixtures::get("PRISM").graph));
}

#[test]
fn triangle_connected_laman_graphs() {
    for n in 3..=8 {
        for code in enumerate_laman(n).unwrap() {
            let g = code.to_graph();
            if delta_classes(&g).is_delta_connected() {
                assert!(enumerate_nac(&g, true).is_empty(), "{code}");
                let deg2 = (0..n).filter(|&v| g.degree(v) == 2).count();
                assert!(deg2 >= 2, "{code} has {deg2} vertices of degree two");
            }
        }
    }
}
