//! One line per acceptance criterion. Runs without the libtest harness so
//! the lines always print; exits nonzero if any criterion fails.
//!
//! The two largest linear cells are stretch goals: they run under a
//! deadline of `CHAINED_ROOKS_BUDGET` seconds (default 60) and are reported
//! as skipped, not failed, when it runs out.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use chained_rooks::asm::{
    concat_circular_k4, count_chained_asm, enumerate_chained_asm, fold_qt, split_linear_odd, unfold_qt,
    visit_chained_asm, Limits,
};
use chained_rooks::counting::{
    binomial, binomial_power_sum, classical_asm_count, count_max_circular, count_max_linear,
    count_max_linear_multinomial, count_placements_formula, factorial, qtasm_count, BigCount,
};
use chained_rooks::io::Document;
use chained_rooks::placements::{
    count_placements_brute, enumerate_maximum_placements, ChainMatching, ChainedPermutation, OneLine,
};
use chained_rooks::views::{from_fpl, from_ice, from_monotone_triangles, to_fpl, to_ice, to_monotone_triangles};
use chained_rooks::{BoardSpec, Shape};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn big(x: u64) -> BigCount {
    BigCount::from(x)
}

fn board(shape: Shape, n: usize, k: usize) -> BoardSpec {
    BoardSpec::new(shape, n, k).unwrap()
}

const SHAPES: [Shape; 2] = [Shape::Linear, Shape::Circular];

fn formula_vs_oracle() -> Outcome {
    let mut cases = 0;
    for shape in SHAPES {
        for n in 1..=3 {
            for k in 1..=4 {
                let b = board(shape, n, k);
                for m in 0..=b.max_rooks() {
                    let f = count_placements_formula(&b, m).map_err(|e| e.to_string())?;
                    let o = count_placements_brute(&b, m).map_err(|e| e.to_string())?;
                    check!(f == o, "{b} m={m}: formula {f}, brute force {o}");
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} (board, m) cases"))
}

fn closed_forms() -> Outcome {
    for n in 1..=6 {
        for k in 1..=8 {
            for shape in SHAPES {
                let b = board(shape, n, k);
                let closed = match shape {
                    Shape::Linear => count_max_linear(n, k),
                    Shape::Circular => count_max_circular(n, k),
                }
                .map_err(|e| e.to_string())?;
                let f = count_placements_formula(&b, b.max_rooks()).map_err(|e| e.to_string())?;
                check!(closed == f, "{b}: closed form {closed}, formula {f}");
            }
        }
    }
    for (shape, n, k, want) in [
        (Shape::Linear, 5, 3, 14400u64),
        (Shape::Circular, 2, 2, 8),
        (Shape::Circular, 3, 3, 324),
    ] {
        let b = board(shape, n, k);
        let brute = count_placements_brute(&b, b.max_rooks()).map_err(|e| e.to_string())?;
        let closed = match shape {
            Shape::Linear => count_max_linear(n, k),
            Shape::Circular => count_max_circular(n, k),
        }
        .unwrap();
        check!(brute == big(want) && closed == brute, "{b}: brute force {brute}, closed {closed}, want {want}");
    }
    Ok("n <= 6, k <= 8 and three brute-force spot checks".into())
}

fn table_regression() -> Outcome {
    use Shape::{Circular as C, Linear as L};
    let cells: &[(Shape, usize, usize, u64)] = &[
        (L, 1, 1, 1), (L, 2, 1, 2), (L, 3, 1, 7), (L, 4, 1, 42), (L, 5, 1, 429), (L, 6, 1, 7436),
        (L, 2, 2, 17), (L, 3, 2, 504), (L, 3, 3, 49), (L, 2, 4, 159), (L, 2, 5, 8), (L, 2, 6, 1129),
        (L, 2, 7, 16), (L, 2, 8, 7151),
        (C, 1, 2, 2), (C, 2, 2, 10), (C, 3, 2, 140),
        (C, 1, 3, 3), (C, 2, 3, 14), (C, 3, 3, 3861),
        (C, 1, 4, 2), (C, 2, 4, 42), (C, 3, 4, 7436),
        (C, 1, 5, 5), (C, 2, 5, 82), (C, 1, 6, 2), (C, 2, 6, 214), (C, 1, 7, 7), (C, 2, 7, 478),
        (C, 1, 8, 2), (C, 2, 8, 1186), (C, 1, 9, 9), (C, 2, 9, 2786),
        (C, 1, 1, 1), (C, 2, 1, 2), (C, 3, 1, 20), (C, 4, 1, 40),
    ];
    for &(shape, n, k, want) in cells {
        let b = board(shape, n, k);
        let got = count_chained_asm(&b);
        check!(got == big(want), "{b}: enumerated {got}, want {want}");
        if shape == Shape::Linear && k == 1 {
            check!(classical_asm_count(n) == got, "{b}: product formula {}", classical_asm_count(n));
        }
    }
    let budget: f64 = std::env::var("CHAINED_ROOKS_BUDGET").ok().and_then(|s| s.parse().ok()).unwrap_or(60.0);
    let mut detail = format!("{} cells", cells.len());
    for (n, k, want) in [(4, 2, 53932u64), (3, 4, 98028)] {
        let b = board(Shape::Linear, n, k);
        let limits = Limits {
            deadline: Some(Instant::now() + Duration::from_secs_f64(budget)),
            max_nodes: None,
        };
        let out = visit_chained_asm(&b, limits, |_| std::ops::ControlFlow::Continue(())).map_err(|e| e.to_string())?;
        if out.complete {
            check!(out.found == want, "stretch {b}: enumerated {}, want {want}", out.found);
            detail.push_str(&format!(", stretch {b} = {want}"));
        } else {
            detail.push_str(&format!(", stretch {b} skipped after {budget}s"));
        }
    }
    Ok(detail)
}

fn plain_set(n: usize) -> BTreeSet<Vec<Vec<i8>>> {
    common::as_set(common::plain_asms(n))
}

fn special_bijections() -> Outcome {
    for (n, k, parts) in [(3, 3, 2u32), (2, 5, 3)] {
        let all = enumerate_chained_asm(&board(Shape::Linear, n, k));
        let plain = plain_set(n);
        let mut images = BTreeSet::new();
        for a in &all {
            let split = split_linear_odd(a).map_err(|e| e.to_string())?;
            check!(split.len() == parts as usize, "split of {} has {} parts", a.board(), split.len());
            for p in &split {
                check!(plain.contains(&p.matrix().rows()), "split part is not an ASM");
            }
            images.insert(split.iter().map(|p| p.matrix().rows()).collect::<Vec<_>>());
        }
        let want = plain.len().pow(parts);
        check!(images.len() == all.len() && all.len() == want, "linear ({n},{k}): {} objects, {} images, want {want}", all.len(), images.len());
    }
    for (n, size) in [(2, 4), (3, 6)] {
        let all = enumerate_chained_asm(&board(Shape::Circular, n, 4));
        let images: BTreeSet<_> = all
            .iter()
            .map(|a| concat_circular_k4(a).map(|p| p.matrix().rows()))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        check!(images.len() == all.len(), "concat is not injective on circular ({n},4)");
        check!(images == plain_set(size), "concat images differ from the {size} x {size} ASMs");
        check!(big(all.len() as u64) == classical_asm_count(size), "circular ({n},4) count");
    }
    for (n, m) in [(2, 1), (4, 2)] {
        let all = enumerate_chained_asm(&board(Shape::Circular, n, 1));
        let mut images = BTreeSet::new();
        for a in &all {
            let q = fold_qt(a).map_err(|e| e.to_string())?;
            check!(q.validate().is_valid() && q.is_quarter_turn_symmetric(), "fold image is not a QTASM");
            check!(unfold_qt(&q).map_err(|e| e.to_string())? == *a, "unfold is not the inverse");
            images.insert(q.matrix().rows());
        }
        check!(images.len() == all.len(), "fold is not injective on circular ({n},1)");
        check!(big(all.len() as u64) == qtasm_count(m).unwrap(), "circular ({n},1) count vs QTASM formula");
        if n == 2 {
            let qt: BTreeSet<_> = common::plain_asms(4)
                .into_iter()
                .filter(|r| {
                    let r = chained_rooks::Matrix::from_rows(r).unwrap();
                    r.rotate_cw() == r
                })
                .collect();
            check!(images == qt, "fold images differ from the 4 x 4 QTASMs");
        }
    }
    let seed = match Document::deserialize(&common::golden("circular_6x1_asm.json")).map_err(|e| e.to_string())? {
        Document::Asm(a) => a,
        other => return Err(format!("6 x 6 golden is a {} document", other.family())),
    };
    let folded = Document::PlainAsm(fold_qt(&seed).map_err(|e| e.to_string())?).serialize();
    check!(folded == common::golden("qtasm_12.json"), "12 x 12 fold differs from the golden:\n{folded}");
    Ok("split 49 and 8, concat 42 and 7436, fold 2 and 40, 12 x 12 byte-exact".into())
}

fn round_trips() -> Outcome {
    let mut boards = Vec::new();
    for shape in SHAPES {
        for n in 1..=3 {
            for k in 1..=3 {
                boards.push(board(shape, n, k));
            }
        }
    }
    boards.push(board(Shape::Circular, 2, 4));
    boards.push(board(Shape::Circular, 2, 6));
    let (mut perms, mut asms) = (0, 0);
    for b in &boards {
        for p in enumerate_maximum_placements(b) {
            let cp = ChainedPermutation::from_placement(&p).map_err(|e| e.to_string())?;
            check!(cp.validate().is_valid(), "{b}: matrix image invalid");
            check!(cp.to_placement() == p, "{b}: placement -> matrix -> placement");
            let o = OneLine::from_permutation(&cp);
            check!(o.validate().is_valid(), "{b}: one-line image {o} invalid");
            let reparsed = OneLine::parse_for(b, &o.to_string()).map_err(|e| e.to_string())?;
            check!(reparsed.to_permutation().map_err(|e| e.to_string())? == cp, "{b}: matrix -> one-line -> matrix");
            let mt = ChainMatching::from_permutation(&cp);
            check!(mt.validate().is_valid(), "{b}: matching image invalid");
            check!(mt.to_permutation().map_err(|e| e.to_string())? == cp, "{b}: matrix -> matching -> matrix");
            perms += 1;
        }
        for a in enumerate_chained_asm(b) {
            check!(a.validate().is_valid(), "{b}: enumerated ASM invalid");
            if !b.is_circular() || b.k() % 2 == 1 {
                continue;
            }
            let t = to_monotone_triangles(&a).map_err(|e| e.to_string())?;
            check!(t.validate().is_valid(), "{b}: triangle image invalid");
            check!(from_monotone_triangles(&t).map_err(|e| e.to_string())? == a, "{b}: ASM -> MT -> ASM");
            let ice = to_ice(&a).map_err(|e| e.to_string())?;
            check!(ice.validate().is_valid(), "{b}: ice image invalid");
            check!(from_ice(&ice).map_err(|e| e.to_string())? == a, "{b}: ASM -> ice -> ASM");
            let fpl = to_fpl(&ice).map_err(|e| e.to_string())?;
            check!(fpl.validate().is_valid(), "{b}: FPL image invalid");
            check!(from_fpl(&fpl).map_err(|e| e.to_string())? == ice, "{b}: ice -> FPL -> ice");
            asms += 1;
        }
    }
    Ok(format!("{perms} chained permutations, {asms} chained ASMs through the avatars"))
}

fn worked_examples() -> Outcome {
    for (file, want) in [
        ("circular_4x6_placement.json", "0200-3104-3000-3420-0004-1032-"),
        ("linear_5x4_placement.json", "30502-04200-00045-31200"),
    ] {
        let Document::Placement(p) = Document::deserialize(&common::golden(file)).map_err(|e| e.to_string())? else {
            return Err(format!("{file} is not a placement"));
        };
        let cp = ChainedPermutation::from_placement(&p).map_err(|e| e.to_string())?;
        let got = OneLine::from_permutation(&cp).to_string();
        check!(got == want, "{file}: one-line {got}, want {want}");
    }
    let Document::Asm(a) = Document::deserialize(&common::golden("circular_4x6_asm.json")).map_err(|e| e.to_string())? else {
        return Err("circular 4x6 golden is not a chained ASM".into());
    };
    let t = to_monotone_triangles(&a).map_err(|e| e.to_string())?;
    let bottoms: Vec<&Vec<usize>> = t.triangles().iter().map(|t| t.last().unwrap()).collect();
    check!(
        bottoms == [&vec![1, 3, 5, 7], &vec![1, 3, 5, 8], &vec![2, 3, 5, 7]],
        "bottom rows {bottoms:?}"
    );
    let text = Document::Triangles(t).serialize();
    check!(text == common::golden("circular_4x6_triangles.json"), "triangles differ from the golden:\n{text}");
    Ok("two one-line strings and three triangles byte-exact".into())
}

fn identities() -> Outcome {
    for n in 1..=6 {
        let b = board(Shape::Linear, n, 1);
        check!(count_placements_formula(&b, n).unwrap() == factorial(n as u64), "P-({n},1) != {n}!");
    }
    for n in 1..=3 {
        let b = board(Shape::Circular, n, 4);
        let want = factorial(2 * n as u64);
        check!(count_placements_formula(&b, b.max_rooks()).unwrap() == want, "P°({n},4) formula != (2n)!");
        check!(count_placements_brute(&b, b.max_rooks()).unwrap() == want, "P°({n},4) brute force != (2n)!");
    }
    for n in 0..=20u64 {
        check!(binomial_power_sum(n, 1) == big(2).pow(n as u32), "sum C({n},j) != 2^{n}");
        check!(binomial_power_sum(n, 2) == binomial(2 * n, n), "sum C({n},j)^2 != C(2n,n)");
    }
    for n in 1..=5 {
        for k in [2, 4, 6] {
            check!(
                count_max_linear_multinomial(n, k).unwrap() == count_max_linear(n, k).unwrap(),
                "multinomial form differs at ({n},{k})"
            );
        }
    }
    Ok("n!, (2n)!, hypergeometric sums to n = 20, multinomial form".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("formula equals brute force", formula_vs_oracle),
        ("closed forms", closed_forms),
        ("chained ASM table", table_regression),
        ("special bijections", special_bijections),
        ("bijection round trips", round_trips),
        ("worked examples", worked_examples),
        ("identities", identities),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
