//! Cross-module identities on the constructed instances: stabiliser orders,
//! local actions, cover relations, and the counting identities that tie the
//! transitivity kernel to the stabiliser chain.


use geodex::constructions as cons;
use geodex::graph::Graph;
use geodex::perm::{Perm, PermGroup};
use geodex::quotients;
use geodex::symmetry::{self, TransitivityMode};
use geodex::{aut, VertexPartition};

#[test]
fn stabilizer_orders_of_the_sporadics() {
    // |Aut(Petersen)_v| = 120 / 10
    let pet = cons::petersen().unwrap().graph;
    let g = aut::automorphism_group(&pet).unwrap();
    for v in [0, 3, 9] {
        assert_eq!(g.stabilizer(v).order(), 12);
    }

    // |Aut(HoS)_v| = 252000 / 50 = 5040, faithful on the 7 neighbours
    let hos = cons::hoffman_singleton().unwrap().graph;
    let g = aut::automorphism_group(&hos).unwrap();
    let stab = g.stabilizer(0);
    assert_eq!(stab.order(), 5040);
    let neighborhood: Vec<usize> = hos.neighbors(0).collect();
    let act = stab.action_on_set(&neighborhood).unwrap();
    assert_eq!(act.group.order(), 5040);
    assert!(act.faithful());
    // the induced group is 3-transitive on the 7 neighbours
    assert!(act.group.is_two_transitive().unwrap());
    let stab2 = act.group.stabilizer(0).stabilizer(1);
    assert_eq!(stab2.orbit(2).len(), 5);
}

#[test]
fn two_arc_transitive_census_graphs_have_two_transitive_local_action() {
    let cases: Vec<(&str, Graph)> = vec![
        ("C_5", cons::cycle(5).unwrap().graph),
        ("K_{3,3}", cons::complete_bipartite(3, 3).unwrap().graph),
        ("petersen", cons::petersen().unwrap().graph),
        ("folded_5_cube", cons::folded_cube(5).unwrap().graph),
        ("gewirtz", cons::gewirtz().unwrap().graph),
        ("m22_graph", cons::m22_graph().unwrap().graph),
        ("higman_sims", cons::higman_sims().unwrap().graph),
        ("hoffman_singleton", cons::hoffman_singleton().unwrap().graph),
    ];
    for (name, graph) in cases {
        let group = aut::automorphism_group(&graph).unwrap();
        let arcs =
            symmetry::transitivity(&graph, &group, TransitivityMode::Arc, 2, 1 << 24).unwrap();
        assert!(arcs.transitive_up_to(2), "{name} must be 2-arc-transitive");
        let la = symmetry::local_action(&graph, &group, 0).unwrap();
        assert!(la.two_transitive, "{name} local action must be 2-transitive");
    }
}

#[test]
fn hoffman_singleton_local_action() {
    let hos = cons::hoffman_singleton().unwrap().graph;
    let g = aut::automorphism_group(&hos).unwrap();
    let la = symmetry::local_action(&hos, &g, 0).unwrap();
    assert_eq!(la.degree, 7);
    assert_eq!(la.image_order, 5040);
    assert!(la.faithful && la.two_transitive && la.two_primitive);
}

#[test]
fn antipodal_blocks_of_the_cube_are_group_blocks() {
    // the antipodal classes of H(3,2) form the minimal block system joining
    // a vertex to its antipode, and the orbit partition of the antipodal map
    let h3 = cons::hamming_2(3).unwrap().graph;
    let g = aut::automorphism_group(&h3).unwrap();
    let blocks = g.minimal_block_system(0, 7).unwrap();
    let antipodal = quotients::antipodal_partition(&h3).unwrap().unwrap();
    assert_eq!(blocks, antipodal);

    let flip = Perm::from_images((0..8).map(|v| v ^ 7).collect()).unwrap();
    let flip_group = PermGroup::new(8, vec![flip]).unwrap();
    assert_eq!(flip_group.orbit_partition(), antipodal);
}

#[test]
fn orbit_counting_cross_check() {
    // when transitive at level s, |G| / |chained stabiliser of a tuple|
    // equals the tuple count
    let cases: Vec<Graph> = vec![
        cons::petersen().unwrap().graph,
        cons::hamming_2(3).unwrap().graph,
        cons::dodecahedron().unwrap().graph,
    ];
    for graph in cases {
        let group = aut::automorphism_group(&graph).unwrap();
        let report =
            symmetry::transitivity(&graph, &group, TransitivityMode::Geodesic, 2, 1 << 24)
                .unwrap();
        assert!(report.transitive_up_to(2));
        let tuple = graph.s_geodesics(2).next().unwrap();
        let mut stab = group.stabilizer(tuple[0]);
        stab = stab.stabilizer(tuple[1]);
        stab = stab.stabilizer(tuple[2]);
        let expected = group.order() / stab.order();
        assert_eq!(expected, report.per_s[1].tuple_count as u128);
    }
}

#[test]
fn intersection_numbers_sum_to_valency_on_vertex_transitive_graphs() {
    let cases: Vec<Graph> = vec![
        cons::petersen().unwrap().graph,
        cons::dodecahedron().unwrap().graph,
        cons::wells().unwrap().graph,
        cons::hos2().unwrap().graph,
        cons::hamming_2(4).unwrap().graph,
    ];
    for graph in cases {
        let k = graph.regular_valency().unwrap();
        let d = graph.diameter().unwrap();
        for level in 1..=d {
            if let Some(nums) = graph.intersection_numbers(level).unwrap() {
                assert_eq!(nums.c + nums.a + nums.b, k);
            }
        }
    }
}

#[test]
fn geodesics_equal_arcs_under_large_girth() {
    // girth >= 2s: s-geodesics are exactly the s-arcs whose endpoints are at
    // distance s; girth >= 5 makes 2-arcs and 2-geodesics coincide outright
    let h3 = cons::hamming_2(3).unwrap().graph; // girth 4, s = 2
    let geodesics: Vec<Vec<usize>> = h3.s_geodesics(2).collect();
    let filtered: Vec<Vec<usize>> = h3
        .s_arcs(2)
        .filter(|t| h3.distances_from(t[0]).get(t[2]) == Some(2))
        .collect();
    assert_eq!(geodesics, filtered);

    for graph in [cons::petersen().unwrap().graph, cons::dodecahedron().unwrap().graph] {
        assert!(graph.girth().unwrap() >= 5);
        let arcs: Vec<Vec<usize>> = graph.s_arcs(2).collect();
        let geos: Vec<Vec<usize>> = graph.s_geodesics(2).collect();
        assert_eq!(arcs, geos);
    }
}

#[test]
fn table_pairs_respect_girth_monotonicity() {
    // for every cover/quotient pair checked by the census, the quotient's
    // girth is at most the cover's
    let pairs: Vec<(Graph, Graph)> = vec![
        (cons::krr_minus_matching(5).unwrap().graph, cons::complete(5).unwrap().graph),
        (cons::hos2().unwrap().graph, cons::complete(7).unwrap().graph),
        (cons::hamming_2(5).unwrap().graph, cons::folded_cube(5).unwrap().graph),
        (cons::wells().unwrap().graph, cons::folded_cube(5).unwrap().graph),
        (cons::dodecahedron().unwrap().graph, cons::petersen().unwrap().graph),
        (
            cons::sdc(&cons::gewirtz().unwrap().graph),
            cons::gewirtz().unwrap().graph,
        ),
    ];
    for (cover, quotient) in pairs {
        let gc = cover.girth().unwrap();
        let gq = quotient.girth().unwrap();
        assert!(gq <= gc, "quotient girth {gq} > cover girth {gc}");
    }
}

#[test]
fn sdc_certificate_identities() {
    // the double cover of the folded 5-cube is the 5-cube
    let f5 = cons::folded_cube(5).unwrap().graph;
    let doubled = cons::sdc(&f5);
    let h5 = cons::hamming_2(5).unwrap().graph;
    assert!(aut::are_isomorphic(&doubled, &h5).unwrap());

    // Hadamard graph of order 4 is H(4,2)
    let h = cons::hadamard_matrix(4, cons::HadamardMethod::Sylvester).unwrap();
    let hg = cons::hadamard_graph(&h).unwrap().graph;
    assert!(aut::are_isomorphic(&hg, &cons::hamming_2(4).unwrap().graph).unwrap());
}

#[test]
fn equal_size_named_graphs_are_distinguished() {
    let pairs: Vec<(Graph, Graph)> = vec![
        (cons::petersen().unwrap().graph, cons::complete_bipartite(5, 5).unwrap().graph),
        (cons::folded_cube(5).unwrap().graph, cons::hamming_2(4).unwrap().graph),
        (cons::wells().unwrap().graph, cons::hamming_2(5).unwrap().graph),
        (cons::wells().unwrap().graph, cons::krr_minus_matching(16).unwrap().graph),
    ];
    for (a, b) in pairs {
        assert_eq!(a.n(), b.n());
        assert!(!aut::are_isomorphic(&a, &b).unwrap());
    }
}

#[test]
fn gewirtz_second_level_numbers_match_brute_force() {
    let gew = cons::gewirtz().unwrap().graph;
    let nums = gew.intersection_numbers(2).unwrap().unwrap();
    // recompute a_2 naively over all distance-2 pairs
    let mut seen = None;
    for u in 0..gew.n() {
        let table = gew.distances_from(u);
        let level2: Vec<usize> = (0..gew.n()).filter(|&v| table.get(v) == Some(2)).collect();
        for &v in &level2 {
            let a = gew.neighbors(v).filter(|&w| table.get(w) == Some(2)).count();
            assert_eq!(*seen.get_or_insert(a), a);
        }
    }
    assert_eq!(nums.a, seen.unwrap());
    assert_eq!((nums.c, nums.a, nums.b), (2, 8, 0));
}

#[test]
fn hamming_is_antipodal_double_cover_of_folded_cube_up_to_dim_8() {
    for d in 3..=8 {
        let h = cons::hamming_2(d).unwrap().graph;
        let partition = quotients::antipodal_partition(&h).unwrap().unwrap();
        assert!(partition.cells().iter().all(|c| c.len() == 2), "d = {d}");
        assert!(quotients::is_cover(&h, &partition).unwrap(), "d = {d}");
        let (quotient, _) = quotients::quotient_graph(&h, &partition).unwrap();
        let folded = cons::folded_cube(d).unwrap().graph;
        assert!(aut::are_isomorphic(&quotient, &folded).unwrap(), "d = {d}");
    }
}

#[test]
fn seeded_search_matches_plain_search_on_hamming() {
    let lg = cons::hamming_2(4).unwrap();
    let seeds = cons::hamming_witnesses(4);
    let plain = aut::automorphism_group(&lg.graph).unwrap().order();
    let seeded = aut::automorphism_group_with(&lg.graph, &seeds, 10_000_000).unwrap().order();
    assert_eq!(plain, seeded);
    assert_eq!(plain, 384); // 2^4 * 4!
}

#[test]
fn higman_sims_second_subconstituent_isomorphic_to_m22_graph() {
    let his = cons::higman_sims().unwrap().graph;
    let sphere = his.sphere(0, 2);
    let (induced, _) = his.induced_subgraph(&sphere).unwrap();
    let m22 = cons::m22_graph().unwrap().graph;
    assert!(aut::are_isomorphic(&induced, &m22).unwrap());
}

#[test]
fn supplied_subgroup_transitivity() {
    // a proper vertex-transitive subgroup can fail arc-transitivity that the
    // full group has: the rotation subgroup of C_6
    let c6 = cons::cycle(6).unwrap().graph;
    let rotation = Perm::from_images((0..6).map(|v| (v + 1) % 6).collect()).unwrap();
    let rot_group = PermGroup::new(6, vec![rotation]).unwrap();
    let report =
        symmetry::transitivity(&c6, &rot_group, TransitivityMode::Arc, 1, 1 << 20).unwrap();
    assert!(!report.transitive_up_to(1));
    let full = aut::automorphism_group(&c6).unwrap();
    let report = symmetry::transitivity(&c6, &full, TransitivityMode::Arc, 1, 1 << 20).unwrap();
    assert!(report.transitive_up_to(1));
}

#[test]
fn partition_json_to_quotient_flow() {
    // the external partition format drives the quotient machinery
    let h3 = cons::hamming_2(3).unwrap().graph;
    let text = "[[0,7],[1,6],[2,5],[3,4]]";
    let partition: VertexPartition = geodex::io::parse_partition_json(text, 8).unwrap();
    assert!(quotients::is_cover(&h3, &partition).unwrap());
    let (q, _) = quotients::quotient_graph(&h3, &partition).unwrap();
    assert!(aut::are_isomorphic(&q, &cons::complete(4).unwrap().graph).unwrap());
}

#[test]
fn rgd_json_to_incidence_flow() {
    // the affine RGD(3,1,3) via JSON: incidence graph is the Pappus graph
    let text = r#"{
        "points": 9,
        "classes": [[0,1,2],[3,4,5],[6,7,8]],
        "blocks": [[0,3,6],[1,4,7],[2,5,8],
                   [0,4,8],[1,5,6],[2,3,7],
                   [0,5,7],[1,3,8],[2,4,6]],
        "parallel_classes": [[0,1,2],[3,4,5],[6,7,8]]
    }"#;
    let design = geodex::io::parse_rgd_json(text).unwrap();
    let inc = cons::rgd_incidence_graph(&design).unwrap();
    assert_eq!(inc.graph.intersection_array().unwrap().to_string(), "(3,2,2,1;1,1,2,3)");
    let partition = quotients::antipodal_partition(&inc.graph).unwrap().unwrap();
    assert!(quotients::is_cover(&inc.graph, &partition).unwrap());
    let (q, _) = quotients::quotient_graph(&inc.graph, &partition).unwrap();
    assert!(aut::are_isomorphic(&q, &cons::complete_bipartite(3, 3).unwrap().graph).unwrap());
}
