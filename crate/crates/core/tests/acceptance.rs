//! Acceptance run: one PASS/FAIL line per criterion, then a non-zero exit
//! status if any criterion failed.
//!
//! Every comparison is exact (dimensions, multiplicities, isomorphism
//! classes). Runtime budgets are part of each criterion and are checked
//! against wall-clock time of the criterion alone.

use posetlab::families::{a_type, atilde, bipath};
use posetlab::intres::{
    default_max_len, gamma, interval_cover, interval_resolution, intresgldim, irreducible_arrows, is_minimal_m,
    tree_koszul_resolution, verify_cover_minimal, verify_ind_preserves_resolution,
};
use posetlab::io::{parse_diagram, parse_poset};
use posetlab::pmod::{
    coinduct, colimit, contract, contract_general, hom_dim, induct, is_isomorphic, res, split_interval_summands,
};
use posetlab::poset::expand_diagram;
use posetlab::{gen, AnSegment, ElemSet, Field, InteriorSystem, Interval, PersistenceModule, Poset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

const F2: Field = Field::GF2;

struct Outcome {
    ok: bool,
    summary: String,
    failures: Vec<String>,
}

impl Outcome {
    fn new(summary: impl Into<String>) -> Self {
        Outcome {
            ok: true,
            summary: summary.into(),
            failures: Vec::new(),
        }
    }

    fn check(&mut self, cond: bool, what: impl FnOnce() -> String) {
        if !cond {
            self.ok = false;
            self.failures.push(what());
        }
    }
}

fn data(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(rel)
}

fn read(rel: &str) -> String {
    std::fs::read_to_string(data(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"))
}

fn gldim(p: &Poset) -> usize {
    intresgldim(p).expect("gldim").gldim
}

fn c1_dim0() -> Outcome {
    let mut out = Outcome::new("");
    let mut count = 0;
    for n in 1..=8usize {
        for mask in 0u32..1 << (n - 1) {
            let forward: Vec<bool> = (0..n - 1).map(|i| mask >> i & 1 == 1).collect();
            let p = a_type(&forward);
            let d = gldim(&p);
            count += 1;
            out.check(d == 0, || format!("A_{n} orientation {forward:?}: gldim {d}"));
        }
    }
    let mut bi = 0;
    for l in 1..=3 {
        for r in 1..=3 {
            let d = gldim(&bipath(l, r));
            bi += 1;
            out.check(d == 0, || format!("bipath({l},{r}): gldim {d}"));
        }
    }
    out.summary = format!("{count} A-type posets (n<=8, all orientations), {bi} bipaths (arms<=3): gldim 0");
    out
}

fn terms_of(res: &posetlab::intres::IntervalResolution) -> Vec<Vec<(ElemSet, usize)>> {
    res.terms()
        .into_iter()
        .map(|t| t.into_iter().map(|(s, c)| (s.into_members(), c)).collect())
        .collect()
}

fn c2_tree_formula() -> Outcome {
    let mut out = Outcome::new("");
    let mut rng = ChaCha8Rng::seed_from_u64(0x7ee5);
    for i in 0..100 {
        let n = rng.gen_range(2..=10);
        let p = gen::random_tree(&mut rng, n);
        let want = p.leaves().len().saturating_sub(2);
        let got = gldim(&p);
        out.check(got == want, || {
            format!("tree #{i} ({n} elements): gldim {got}, #leaves-2 = {want}")
        });
    }
    // With a single arrow the complex stops at V_1 and resolves nothing.
    let mut pairs = 0;
    while pairs < 30 {
        let n = rng.gen_range(3..=10);
        let p = Arc::new(gen::random_tree(&mut rng, n));
        let candidates: Vec<Interval> = p
            .enumerate_intervals()
            .into_iter()
            .filter(|s| irreducible_arrows(&p, s).len() >= 2)
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let s = &candidates[rng.gen_range(0..candidates.len())];
        pairs += 1;
        let k = tree_koszul_resolution(&p, F2, s).expect("koszul");
        let g = gamma(&p, F2, s).expect("gamma");
        let r = interval_resolution(&g, default_max_len(&g)).expect("resolution");
        let label = || format!("{:?} S={}", p.covers(), p.fmt_set(s.members()));
        out.check(r.dim() == k.gamma_dim(), || {
            format!("{}: engine {} vs oracle {}", label(), r.dim(), k.gamma_dim())
        });
        out.check(terms_of(&r) == k.resolution_terms(), || {
            format!("{}: terms differ", label())
        });
    }
    out.summary = "100 random trees: gldim = #leaves-2; 30 Koszul/engine termwise comparisons (>=2 arrows)".into();
    out
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut v = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            v.push(rest);
        }
    }
    v
}

fn c3_atilde() -> Outcome {
    let mut out = Outcome::new("");
    let mut count = 0;
    for extra in 0..=4 {
        for arms in compositions(extra, 4) {
            let d = gldim(&atilde(&arms));
            count += 1;
            out.check(d == 1, || format!("s=2 arms {arms:?}: gldim {d}"));
        }
    }
    for arms in [vec![0; 6], vec![1, 1, 0, 0, 0, 0]] {
        let d = gldim(&atilde(&arms));
        out.check(d == 2, || format!("s=3 arms {arms:?}: gldim {d}"));
    }
    out.summary =
        format!("{count} s=2 cycles (size<=8) gldim 1; alternating 6-cycle and an 8-element s=3 cycle gldim 2");
    out
}

fn c4_op_duality() -> Outcome {
    let mut out = Outcome::new("50 random connected posets (n<=7): gldim P = gldim P^op");
    let mut rng = ChaCha8Rng::seed_from_u64(0x0b);
    for i in 0..50 {
        let n = rng.gen_range(2..=7);
        let density = rng.gen_range(0.2..0.7);
        let p = gen::random_connected_poset(&mut rng, n, density);
        let (a, b) = (gldim(&p), gldim(&p.opposite()));
        out.check(a == b, || format!("poset #{i} {:?}: {a} vs op {b}", p.covers()));
    }
    out
}

struct SegmentCase {
    name: String,
    poset: Poset,
    segment: Vec<String>,
}

/// `context` is a diagram body naming `l1` and `ln`; the segment between
/// them is added as a double edge of size `n`.
fn segment_case(name: &str, context: &str, edge: &str, n: usize) -> SegmentCase {
    let text = format!("diagram {name}\n{context}\n{edge}\n");
    let d = parse_diagram(&text).expect("case diagram");
    let idx = d.edges.len() - 1;
    let p = expand_diagram(&d, &HashMap::from([(idx, n)])).expect("case expands");
    let mut segment = vec!["l1".to_string()];
    segment.extend((1..n - 1).map(|k| format!("l1.ln.{k}")));
    segment.push("ln".to_string());
    SegmentCase {
        name: format!("{name} n={n}"),
        poset: p,
        segment,
    }
}

fn segment_cases() -> Vec<SegmentCase> {
    let mut cases = Vec::new();
    // Case (a): equioriented segments.
    let fig = "vertices: x1 x2 x3 l1 ln y1 y2\narrow x1 l1\narrow x2 l1\narrow x3 l1\narrow ln y1\narrow ln y2";
    let cycle = "vertices: r s t m l1 ln\narrow r s\narrow s l1\narrow s m\narrow m t\narrow ln t";
    let fork = "vertices: a b c d e l1 ln\narrow a l1\narrow b l1\narrow b e\narrow ln c\narrow ln d";
    let tail = "vertices: c x y z l1 ln\narrow ln c\narrow c x\narrow c y\narrow c z";
    for (name, ctx) in [("fig_a", fig), ("bipath_a", cycle), ("fork_a", fork), ("tail_a", tail)] {
        for n in 4..=6 {
            cases.push(segment_case(name, ctx, "darrow l1 ln", n));
        }
    }
    // Case (b): ℓ_n a leaf, mixed orientations.
    let star = "vertices: p q r l1 ln\narrow p l1\narrow q l1\narrow r l1";
    for pat in ["><>", "><<>", "><><<"] {
        cases.push(segment_case(
            "star_b",
            star,
            &format!("dline l1 ln {pat}"),
            pat.len() + 1,
        ));
    }
    let square = "vertices: 1 3 4 l1 ln\narrow 1 l1\narrow 1 4\narrow 3 l1\narrow 3 4";
    for pat in [">><", "><<<", "><>><"] {
        cases.push(segment_case(
            "square_b",
            square,
            &format!("dline l1 ln {pat}"),
            pat.len() + 1,
        ));
    }
    let form_v = "vertices: 1 2 3 4 l1 ln\narrow 1 2\narrow 1 4\narrow 3 2\narrow 3 4\narrow 1 l1\narrow 3 l1";
    for pat in ["><<", ">><>"] {
        cases.push(segment_case(
            "form_v_b",
            form_v,
            &format!("dline l1 ln {pat}"),
            pat.len() + 1,
        ));
    }
    cases
}

fn c5_segments() -> Outcome {
    let cases = segment_cases();
    let mut out = Outcome::new("");
    let (mut eq, mut leaf) = (0, 0);
    for c in &cases {
        let ids: Vec<usize> = c
            .segment
            .iter()
            .map(|l| c.poset.id_of(l).expect("segment label"))
            .collect();
        let seg = match AnSegment::new(&c.poset, ids) {
            Ok(s) => s,
            Err(e) => {
                out.check(false, || format!("{}: not a segment: {e}", c.name));
                continue;
            }
        };
        out.check(seg.qualifies(&c.poset), || format!("{}: hypothesis unmet", c.name));
        if seg.is_equioriented() {
            eq += 1;
        } else if c.poset.is_leaf(seg.last()) {
            leaf += 1;
        }
        let small = c.poset.contract_segment(&seg).expect("contract");
        let (before, after) = (gldim(&c.poset), gldim(&small));
        out.check(small.n() + seg.len() - 3 == c.poset.n(), || {
            format!("{}: wrong element count", c.name)
        });
        out.check(before == after, || format!("{}: gldim {before} -> {after}", c.name));
    }
    out.summary = format!(
        "{} hand-built posets ({eq} equioriented, {leaf} leaf-ended mixed), n in 4..=6: gldim unchanged",
        cases.len()
    );
    out
}

struct AlignedInstance {
    sys: InteriorSystem,
    over_q: PersistenceModule,
    over_p: PersistenceModule,
}

fn aligned_instances() -> Vec<AlignedInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11);
    (0..50)
        .map(|_| {
            let n = rng.gen_range(5..=8);
            let density = rng.gen_range(0.25..0.6);
            let sys = gen::random_aligned_system(&mut rng, n, density);
            let over_q = gen::random_module(&mut rng, sys.sub_poset(), F2, 10).expect("module over Q");
            let over_p = gen::random_module(&mut rng, sys.ambient(), F2, 10).expect("module over P");
            AlignedInstance { sys, over_q, over_p }
        })
        .collect()
}

fn c6_functor_laws(instances: &[AlignedInstance]) -> Outcome {
    let mut out = Outcome::new(format!(
        "{} random aligned (P,Q,M): Cont Ind = id, Ind I_S = I_ceil(S), Cont I_T = I_Tbar, adjunctions",
        instances.len()
    ));
    for (i, inst) in instances.iter().enumerate() {
        let sys = &inst.sys;
        let (p, q) = (sys.ambient().clone(), sys.sub_poset().clone());
        let n = &inst.over_q;
        let m = &inst.over_p;
        let ind = induct(sys, n).expect("Ind");
        let back = contract(sys, &ind).expect("Cont");
        out.check(is_isomorphic(&back, n).expect("iso"), || {
            format!("#{i}: Cont Ind N not isomorphic to N")
        });
        for s in q.enumerate_intervals() {
            let is = PersistenceModule::interval(q.clone(), F2, s.members()).expect("I_S");
            let lhs = induct(sys, &is).expect("Ind");
            let rhs = PersistenceModule::indicator(p.clone(), F2, &sys.ceil_preimage(s.members())).expect("I_ceil");
            out.check(is_isomorphic(&lhs, &rhs).expect("iso"), || {
                format!("#{i}: Ind I_S for S={}", q.fmt_set(s.members()))
            });
        }
        for t in p.enumerate_intervals() {
            let it = PersistenceModule::interval(p.clone(), F2, t.members()).expect("I_T");
            let lhs = contract(sys, &it).expect("Cont");
            let rhs =
                PersistenceModule::indicator(q.clone(), F2, &sys.tbar(t.members()).expect("tbar")).expect("I_Tbar");
            out.check(is_isomorphic(&lhs, &rhs).expect("iso"), || {
                format!("#{i}: Cont I_T for T={}", p.fmt_set(t.members()))
            });
            let general = contract_general(sys, &it).expect("Cont general");
            out.check(is_isomorphic(&lhs, &general).expect("iso"), || {
                format!(
                    "#{i}: Cont via nu and via colimits differ on T={}",
                    p.fmt_set(t.members())
                )
            });
        }
        let cm = contract(sys, m).expect("Cont M");
        let co = coinduct(sys, n).expect("Coind N");
        let rm = res(sys, m).expect("Res M");
        let pairs = [
            ("Hom(Cont M, N) = Hom(M, Ind N)", hom_dim(&cm, n), hom_dim(m, &ind)),
            ("Hom(Ind N, M) = Hom(N, Res M)", hom_dim(&ind, m), hom_dim(n, &rm)),
            ("Hom(Res M, N) = Hom(M, Coind N)", hom_dim(&rm, n), hom_dim(m, &co)),
        ];
        for (law, a, b) in pairs {
            let (a, b) = (a.expect("hom"), b.expect("hom"));
            out.check(a == b, || format!("#{i}: {law}: {a} vs {b}"));
        }
    }
    out
}

fn c7_transport(instances: &[AlignedInstance]) -> Outcome {
    let mut out = Outcome::new("");
    let (mut checked, mut positive) = (0, 0);
    for (i, inst) in instances.iter().enumerate() {
        let q = inst.sys.sub_poset();
        // The random module, plus every Γ_T over Q since those carry the
        // largest dimensions.
        let mut modules = vec![("M".to_string(), inst.over_q.clone())];
        for t in q.enumerate_intervals() {
            let g = gamma(q, F2, &t).expect("gamma");
            modules.push((format!("Gamma_{}", q.fmt_set(t.members())), g));
        }
        for (name, m) in modules {
            let r = verify_ind_preserves_resolution(&inst.sys, &m).expect("verify");
            checked += 1;
            positive += usize::from(r.dim_over_q > 0);
            out.check(r.termwise_isomorphic(), || {
                format!("#{i} {name}: transported terms differ")
            });
            out.check(r.dim_over_q == r.dim_over_p, || {
                format!(
                    "#{i} {name}: intresdim {} over Q vs {} over P",
                    r.dim_over_q, r.dim_over_p
                )
            });
        }
    }
    out.summary = format!(
        "{} instances, {checked} modules ({positive} of positive intresdim): Ind of the Q-resolution is the P-resolution termwise",
        instances.len()
    );
    out
}

fn c8_non_aligned() -> Outcome {
    let p = Arc::new(parse_poset(&read("preservation.poset")).expect("poset"));
    let mut q = p.full_set();
    q.remove(p.id_of("x'").expect("x'"));
    let sys = InteriorSystem::new(p.clone(), &q).expect("interior");
    let s = p.subset(&["y", "z", "w", "x'"]).expect("S");
    let is = PersistenceModule::interval(p.clone(), F2, &s).expect("I_S");
    let c = contract_general(&sys, &is).expect("Cont");
    let split = split_interval_summands(&c).expect("split");
    let mut out = Outcome::new(format!(
        "non-aligned Q: Cont I_S dims {:?}, residual dim {} after splitting",
        c.dims(),
        split.residual.total_dim()
    ));
    out.check(!sys.is_aligned(), || "system unexpectedly aligned".into());
    out.check(c.dims() == [1, 1, 2, 1], || format!("dims {:?}", c.dims()));
    out.check(!split.residual.is_zero(), || "residual is zero".into());
    out.check(!split.is_interval_decomposable(), || "splits into intervals".into());
    out
}

fn diagram_posets(rel: &str, m: usize, all_orientations: bool) -> Vec<Poset> {
    let d = parse_diagram(&read(rel)).unwrap_or_else(|e| panic!("{rel}: {e}"));
    let insts = d.instantiations(m);
    let chosen = if all_orientations {
        insts
    } else {
        insts.into_iter().take(1).collect()
    };
    chosen
        .iter()
        .map(|i| expand_diagram(i, &HashMap::new()).unwrap_or_else(|e| panic!("{rel}: {e}")))
        .collect()
}

fn orient_desc(p: &Poset) -> String {
    p.covers()
        .iter()
        .map(|&(a, b)| format!("{}<{}", p.label(a), p.label(b)))
        .collect::<Vec<_>>()
        .join(",")
}

fn c9_forms() -> Outcome {
    let mut out = Outcome::new("");
    let mut posets = 0;
    for k in 1..=14 {
        let rel = format!("dim1_forms/t{k:02}.diag");
        let mut list = diagram_posets(&rel, 2, true);
        list.extend(diagram_posets(&rel, 3, false));
        for p in list {
            posets += 1;
            let d = gldim(&p);
            out.check(d == 1, || {
                format!("dim-1 form t{k:02} [{}]: gldim {d}, expected 1", orient_desc(&p))
            });
        }
    }
    let forms = ["i", "ii_4", "ii_6", "iii", "iv_2", "v", "vi", "vii", "viii", "ix"];
    for f in forms {
        for p in diagram_posets(&format!("dim2_forms/{f}.diag"), 2, true) {
            posets += 1;
            let d = gldim(&p);
            out.check(d == 2, || {
                format!("dim-2 form {f} [{}]: gldim {d}, expected 2", orient_desc(&p))
            });
            if ["i", "iii", "v"].contains(&f) {
                let minimal = is_minimal_m(&p, 2).expect("minimality");
                out.check(minimal, || {
                    format!("dim-2 form {f} [{}]: not minimal in M_2", orient_desc(&p))
                });
            }
        }
    }
    out.summary = format!("{posets} instantiations of dim-1 forms and dim-2 forms; minimality of i, iii, v");
    out
}

/// Intervals by exhaustive subset search, using only `leq`.
fn brute_intervals(p: &Poset) -> Vec<u32> {
    let n = p.n();
    let mut found = Vec::new();
    for mask in 1u32..1 << n {
        let has = |a: usize| mask >> a & 1 == 1;
        let convex =
            (0..n).all(|b| has(b) || !(0..n).any(|a| has(a) && p.leq(a, b) && (0..n).any(|c| has(c) && p.leq(b, c))));
        if !convex {
            continue;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u32 << start;
        let mut stack = vec![start];
        while let Some(a) = stack.pop() {
            for b in 0..n {
                if has(b) && seen >> b & 1 == 0 && p.comparable(a, b) {
                    seen |= 1 << b;
                    stack.push(b);
                }
            }
        }
        if seen == mask {
            found.push(mask);
        }
    }
    found
}

fn to_mask(s: &ElemSet) -> u32 {
    s.iter().map(|a| 1u32 << a).sum()
}

fn c10_properties() -> Outcome {
    let mut out = Outcome::new(
        "interval enumeration (n<=12), commutativity checkers (n<=8), cover minimality, summand recovery, colimits",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(0x10);
    for i in 0..40 {
        let n = rng.gen_range(1..=12);
        let density = rng.gen_range(0.1..0.6);
        let p = gen::random_poset(&mut rng, n, density);
        let mut fast: Vec<u32> = p.enumerate_intervals().iter().map(|s| to_mask(s.members())).collect();
        let mut slow = brute_intervals(&p);
        fast.sort_unstable();
        slow.sort_unstable();
        out.check(fast == slow, || {
            format!("enumeration #{i}: {} vs {} intervals", fast.len(), slow.len())
        });
    }
    for i in 0..60 {
        let n = rng.gen_range(2..=8);
        let density = rng.gen_range(0.2..0.7);
        let p = Arc::new(gen::random_connected_poset(&mut rng, n, density));
        let m = gen::random_module(&mut rng, &p, F2, 10).expect("module");
        let mut maps = m.maps().to_vec();
        if let Some(k) = (0..maps.len()).find(|&k| maps[k].rows() * maps[k].cols() > 0) {
            let (r, c) = (rng.gen_range(0..maps[k].rows()), rng.gen_range(0..maps[k].cols()));
            let v = maps[k].get(r, c);
            maps[k].set(r, c, 1 - v);
        }
        let raw = PersistenceModule::new_unchecked(p.clone(), F2, m.dims().to_vec(), maps);
        for x in [&m, &raw] {
            let (a, b) = (
                x.check_commutativity().is_ok(),
                x.check_commutativity_all_paths().is_ok(),
            );
            out.check(a == b, || format!("commutativity #{i}: fast {a} vs all paths {b}"));
        }
    }
    for i in 0..30 {
        let n = rng.gen_range(2..=6);
        let p = Arc::new(gen::random_connected_poset(&mut rng, n, 0.4));
        let m = gen::random_module(&mut rng, &p, F2, 8).expect("module");
        let c = interval_cover(&m).expect("cover");
        out.check(c.cover_map.is_surjective() && verify_cover_minimal(&c, &m), || {
            format!("cover #{i}: not a minimal surjective approximation")
        });
    }
    for i in 0..30 {
        let n = rng.gen_range(2..=6);
        let p = Arc::new(gen::random_connected_poset(&mut rng, n, 0.4));
        let ints = p.enumerate_intervals();
        let field = if i % 2 == 0 { F2 } else { Field::new(3).expect("GF3") };
        let mut chosen: Vec<Interval> = (0..rng.gen_range(1..=4))
            .map(|_| ints[rng.gen_range(0..ints.len())].clone())
            .collect();
        let parts: Vec<PersistenceModule> = chosen
            .iter()
            .map(|s| PersistenceModule::interval(p.clone(), field, s.members()).expect("I_S"))
            .collect();
        let sum = PersistenceModule::direct_sum(p.clone(), field, &parts).expect("sum");
        let shuffled = gen::shuffle_basis(&mut rng, &sum);
        let split = split_interval_summands(&shuffled).expect("split");
        let mut got: Vec<Interval> = split
            .summands
            .iter()
            .flat_map(|(s, k)| std::iter::repeat_n(s.clone(), *k))
            .collect();
        got.sort();
        chosen.sort();
        out.check(split.residual.is_zero() && got == chosen, || {
            format!("summands #{i}: recovered {} of {}", got.len(), chosen.len())
        });
    }
    for i in 0..20 {
        let n = rng.gen_range(1..=7);
        let p = Arc::new(gen::random_connected_poset(&mut rng, n, 0.4));
        for s in p.enumerate_intervals() {
            let m = PersistenceModule::interval(p.clone(), F2, s.members()).expect("I_S");
            let want = usize::from(p.is_upset(s.members()));
            let got = colimit(&m).dim;
            out.check(got == want, || {
                format!("colimit #{i} S={}: {got}, expected {want}", p.fmt_set(s.members()))
            });
        }
    }
    out
}

fn main() {
    let mut all_ok = true;
    let mut report = String::new();
    let mut run = |id: &str, budget: Duration, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let mut o = f();
        let el = t.elapsed();
        o.check(el < budget, || {
            format!("runtime {:.2}s exceeds budget {}s", el.as_secs_f64(), budget.as_secs())
        });
        all_ok &= o.ok;
        let tag = if o.ok { "PASS" } else { "FAIL" };
        let line = format!(
            "{tag} {id}: {} [{:.2}s, budget {}s]",
            o.summary,
            el.as_secs_f64(),
            budget.as_secs()
        );
        println!("{line}");
        let _ = writeln!(report, "{line}");
        for f in o.failures.iter().take(20) {
            println!("    {f}");
        }
        if o.failures.len() > 20 {
            println!("    ... {} more", o.failures.len() - 20);
        }
    };
    let secs = Duration::from_secs;
    run("C1", secs(10), &mut c1_dim0);
    run("C2", secs(120), &mut c2_tree_formula);
    run("C3", secs(120), &mut c3_atilde);
    run("C4", secs(300), &mut c4_op_duality);
    run("C5", secs(600), &mut c5_segments);
    let instances = aligned_instances();
    run("C6", secs(600), &mut || c6_functor_laws(&instances));
    run("C7", secs(600), &mut || c7_transport(&instances));
    run("C8", secs(60), &mut c8_non_aligned);
    run("C9", secs(900), &mut c9_forms);
    run("C10", secs(600), &mut c10_properties);
    if !all_ok {
        std::process::exit(1);
    }
}
