use std::convert::Infallible;
use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use regint_core::automata::{determinize, parse_regex, regex_to_nfa, Alphabet};
use regint_core::deciders::decide_intreg_sequential_string_eq;
use regint_core::problems::{
    check_bpcp, member_shuffled_string_eq, solve_bounded_tiling, Move, PcpInstance, TilingVariant, TmSpec,
    TmTransition,
};
use regint_core::reductions::{reduce_pcp_to_shuffled_regex, tiling_instance_for_input};
use regint_core::{find_witness, SearchBudget};

fn classic() -> PcpInstance {
    PcpInstance::from_lists(&["1", "10111", "10"], &["111", "10", "0"]).unwrap()
}

fn bpcp(c: &mut Criterion) {
    let instance = classic();
    c.bench_function("check_bpcp classic K=4", |b| b.iter(|| check_bpcp(black_box(&instance), 4)));
}

fn shuffled_search(c: &mut Criterion) {
    let lang = reduce_pcp_to_shuffled_regex(&classic(), '_').unwrap();
    c.bench_function("find_witness classic shuffled", |b| {
        b.iter(|| {
            find_witness(
                &lang.nfa,
                |w| Ok::<_, Infallible>(member_shuffled_string_eq(w, &lang.alphabet, '_')),
                SearchBudget::length_only(40),
            )
            .unwrap()
        })
    });
}

fn sequential_decider(c: &mut Criterion) {
    let alphabet = Alphabet::from_str_chars("ab_$");
    let dfa = determinize(&regex_to_nfa(&parse_regex("(ab|_)*(a_b)*$(a|b_)*b", &alphabet).unwrap()));
    let base = Alphabet::from_str_chars("ab");
    c.bench_function("sequential decider", |b| {
        b.iter(|| decide_intreg_sequential_string_eq(black_box(&dfa), &base, '_').unwrap())
    });
}

fn bounded_tiling(c: &mut Criterion) {
    let step = |from, read, to, write, dir| TmTransition { from, read, to, write, dir };
    let tm = TmSpec::new(
        3,
        vec!['0', '1'],
        vec!['_', '0', '1'],
        '_',
        0,
        1,
        vec![step(0, '0', 0, '0', Move::R), step(0, '1', 2, '0', Move::L), step(2, '0', 1, '0', Move::S)],
    )
    .unwrap();
    let instance = tiling_instance_for_input(&tm, "01", 8, TilingVariant::Bounded).unwrap();
    c.bench_function("bounded tiling 8x8", |b| b.iter(|| solve_bounded_tiling(black_box(&instance))));
}

criterion_group!(benches, bpcp, shuffled_search, sequential_decider, bounded_tiling);
criterion_main!(benches);
