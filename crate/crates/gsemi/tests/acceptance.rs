//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gsemi::dynkin::{cm_classification, positive_roots, DynkinType};
use gsemi::gp::{check_gsemisimple, check_one_gorenstein, singularity_descriptor, Classification};
use gsemi::oracle::{
    ext_dims, is_isomorphic, projective_cover_and_syzygy, realize_ideal, GpCertifier,
};
use gsemi::qalg::{parse_algebra, BoundQuiverAlgebra, Quiver};
use gsemi::repcat::knit::check_component;
use gsemi::repcat::reps::{random_acyclic_quiver, random_stable_rep};
use gsemi::repcat::sn::all_almost_split;
use gsemi::repcat::{
    divisibility_report, knit_stable_component, lift, psi, sn_indecomposables, stable_components,
    stable_isomorphic, verify_gp_rep, verify_sequence,
};

const FIXTURES: [&str; 5] = ["kx2", "nakayama3", "two_cycles", "a2", "path_ba"];

fn fixture(name: &str) -> BoundQuiverAlgebra {
    let path = format!("{}/fixtures/{name}.alg", env!("CARGO_MANIFEST_DIR"));
    parse_algebra(&std::fs::read_to_string(&path).unwrap()).unwrap()
}

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn non_projective_count(alg: &BoundQuiverAlgebra, n: usize) -> usize {
    sn_indecomposables(alg, n)
        .iter()
        .filter(|o| !o.is_projective())
        .count()
}

fn loop_algebra() -> Outcome {
    let alg = fixture("kx2");
    let gs = check_gsemisimple(&alg);
    ensure(gs.m == 1, || format!("m = {}", gs.m))?;
    ensure(gs.classes.len() == 1 && gs.classes[0].period == 1, || {
        format!("classes {:?}", gs.classes)
    })?;
    let d = singularity_descriptor(&alg);
    ensure(d.periods == [1], || format!("descriptor {}", d.multiset()))?;
    let s2 = sn_indecomposables(&alg, 2).len();
    ensure(s2 == 5, || format!("S_2 has {s2} indecomposables"))?;
    let c = knit_stable_component(&alg, 2, 0);
    ensure(c.len() == 3, || {
        format!("component has {} vertices", c.len())
    })
}

fn nakayama() -> Outcome {
    let alg = fixture("nakayama3");
    let gs = check_gsemisimple(&alg);
    ensure(gs.m == 3, || format!("m = {}", gs.m))?;
    ensure(gs.classes.len() == 1 && gs.classes[0].period == 3, || {
        format!("classes {:?}", gs.classes)
    })?;
    let d = singularity_descriptor(&alg);
    ensure(d.periods == [3], || format!("descriptor {}", d.multiset()))?;
    let comps = stable_components(&alg, 2);
    ensure(comps.len() == gs.classes.len(), || {
        format!("{} components", comps.len())
    })?;
    ensure(comps[0].len() == 9, || {
        format!("component has {} vertices", comps[0].len())
    })?;
    let covered: BTreeSet<_> = comps
        .iter()
        .flat_map(|c| c.vertices.iter().copied())
        .collect();
    ensure(covered.len() == non_projective_count(&alg, 2), || {
        "components do not partition S_2".into()
    })
}

fn example_two_cycles() -> Outcome {
    let alg = fixture("two_cycles");
    let cls = Classification::new(&alg);
    ensure(
        alg.vertex_count() == 4 && alg.arrow_count() == 6 && alg.relations().len() == 6,
        || "fixture shape".into(),
    )?;
    let lens: Vec<usize> = cls.components.iter().map(|c| c.cycle.len()).collect();
    ensure(lens == [3, 3], || format!("perfect components {lens:?}"))?;
    ensure(cls.m() == 6, || format!("m = {}", cls.m()))?;
    let mut periods = singularity_descriptor(&alg).periods;
    periods.sort_unstable();
    ensure(periods == [3, 3], || format!("descriptor {periods:?}"))?;
    let one = check_one_gorenstein(&alg);
    ensure(one.one_gorenstein, || {
        format!("offending arrows {:?}", one.offending)
    })
}

fn divisibility() -> Outcome {
    let alg = fixture("kx2");
    let c = knit_stable_component(&alg, 3, 0);
    let r = divisibility_report(3, &c);
    ensure(c.len() == 6 && r.divisor == 2 && r.pass, || {
        format!("n = 3: {r:?}")
    })?;
    ensure(check_component(&alg, &c).ok(), || {
        "n = 3 component fails its invariants".into()
    })?;
    for name in FIXTURES {
        let alg = fixture(name);
        for comp in stable_components(&alg, 2) {
            let r = divisibility_report(2, &comp);
            ensure(r.divisor == 3 && r.pass, || format!("{name}: {r:?}"))?;
        }
    }
    Ok(())
}

fn root_counts() -> Outcome {
    for name in FIXTURES {
        let alg = fixture(name);
        for n in 1..=4 {
            let report = cm_classification(&alg, &Quiver::linear(n)).map_err(|e| e.to_string())?;
            let sn = non_projective_count(&alg, n);
            ensure(report.gp_count == Some(sn), || {
                format!("{name}, n = {n}: {:?} vs {sn}", report.gp_count)
            })?;
        }
    }
    for k in 1..=8 {
        let c = positive_roots(DynkinType::A(k)).len();
        ensure(c == k * (k + 1) / 2, || format!("A{k} has {c} roots"))?;
    }
    let d4 = positive_roots(DynkinType::D(4)).len();
    let e6 = positive_roots(DynkinType::E6).len();
    ensure(d4 == 12 && e6 == 36, || format!("D4 {d4}, E6 {e6}"))
}

fn oracle_agreement() -> Outcome {
    for name in FIXTURES {
        for p in [2, 101] {
            let alg = fixture(name).with_field_char(p);
            let cls = Classification::new(&alg);
            for a in cls.perfect_arrows() {
                let m = realize_ideal(&alg, a, p);
                let syz = projective_cover_and_syzygy(&alg, &m)
                    .map_err(|e| e.to_string())?
                    .syzygy;
                let iso = is_isomorphic(&alg, &syz, &realize_ideal(&alg, cls.omega(a), p), 0)
                    .map_err(|e| e.to_string())?;
                ensure(iso, || {
                    format!("{name}, p = {p}: syzygy of {} differs", alg.arrow_name(a))
                })?;
                let ext = ext_dims(&alg, &m, 8);
                ensure(ext.iter().all(|&d| d == 0), || {
                    format!("{name}, p = {p}: Ext of {} is {ext:?}", alg.arrow_name(a))
                })?;
            }
        }
    }
    Ok(())
}

fn density() -> Outcome {
    for name in FIXTURES {
        let alg = fixture(name);
        let cls = Classification::new(&alg);
        let known = cls.gp_indecomposables(&alg);
        let cert = GpCertifier::new(&alg, &known, alg.field_char(), 8, 0);
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for trial in 0..100 {
            let q = random_acyclic_quiver(&mut rng, 5, 6);
            let r = random_stable_rep(&alg, &cls, q, 2, &mut rng);
            let fail = |why: String| format!("{name}, trial {trial}: {why}");
            let h = lift(&alg, &r).map_err(|e| fail(e.to_string()))?;
            let report = verify_gp_rep(&alg, &h, &cert).map_err(|e| fail(e.to_string()))?;
            ensure(report.ok, || {
                fail(format!("lift fails at {:?}", report.first_failure))
            })?;
            let back =
                stable_isomorphic(&psi(&alg, &h), &r, trial).map_err(|e| fail(e.to_string()))?;
            ensure(back, || fail("psi(lift(R)) is not isomorphic to R".into()))?;
        }
    }
    Ok(())
}

fn sequences() -> Outcome {
    for name in FIXTURES {
        let alg = fixture(name);
        for n in 2..=4 {
            for s in all_almost_split(&alg, n) {
                let c = verify_sequence(&alg, &s).map_err(|e| e.to_string())?;
                ensure(c.ok(), || format!("{name}: {} fails {c:?}", s.render(&alg)))?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        (
            "loop algebra: m, class, descriptor, S_2 count, component size",
            loop_algebra,
        ),
        (
            "cyclic Nakayama: m, class, descriptor, component size and count",
            nakayama,
        ),
        (
            "two relation 3-cycles: components, m, descriptor, 1-Gorenstein",
            example_two_cycles,
        ),
        ("divisibility of component sizes", divisibility),
        ("root counts agree with S_n counts", root_counts),
        ("oracle syzygies and Ext vanishing", oracle_agreement),
        ("lift density on random stable representations", density),
        ("almost split sequences are exact and additive", sequences),
    ];
    let mut failures = 0;
    for (k, (desc, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => println!("criterion {}: PASS  {desc}", k + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {}: FAIL  {desc}: {why}", k + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
