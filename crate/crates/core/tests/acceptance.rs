//! Acceptance suite: one line per criterion, non-zero exit on any failure.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use etale_core::companion::{
    check_nucleus, closure_nucleus, completion, etale_of, fixed_point_check, quotient_map,
    reconstruct_projection_pure, rejected_perturbations, universal_extension, verify_inv_iso,
    DEFAULT_CAP,
};
use etale_core::cuntz::random::{random_prefix_code, random_table, random_total};
use etale_core::cuntz::{endo_check, zero_simplifying_witness, CantorTerm, TableMap};
use etale_core::monoid::{
    build_boolean_algebra, build_i, build_pt, find_isomorphism, is_isomorphism, two_element,
    DEFAULT_ISO_BOUND,
};
use etale_core::words::{is_prefix_code, orthogonal_set_check, BasicMap, PrefixCode, Word};

type Outcome = Result<String, String>;

const SEED: u64 = 0x5eed;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_axioms() -> Outcome {
    for n in 1..=3 {
        for m in [build_pt(n).unwrap(), build_i(n).unwrap()] {
            let r = m.check_axioms();
            ensure(r.passed, || format!("{} fails: {:?}", m.name(), r.violations.first()))?;
        }
    }
    let pt = build_pt(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let size = pt.size();
    for trial in 0..20 {
        let mutated = if rng.gen_bool(0.5) {
            let (a, b) = (rng.gen_range(0..size), rng.gen_range(0..size));
            let v = (pt.mul(a, b) + rng.gen_range(1..size)) % size;
            pt.with_mul_entry(a, b, v).unwrap()
        } else {
            let a = rng.gen_range(0..size);
            let v = (pt.star(a) + rng.gen_range(1..size)) % size;
            pt.with_star_entry(a, v).unwrap()
        };
        ensure(!mutated.check_axioms().passed, || format!("mutation {} went undetected", trial))?;
    }
    Ok("PT_n, I_n (n<=3) pass; 20/20 mutations of PT_2 detected".into())
}

fn c2_partial_units() -> Outcome {
    for n in 1..=3 {
        let pt = build_pt(n).unwrap();
        let units = pt.partial_units();
        let inv = pt.submonoid("Inv", &units).map_err(|e| e.to_string())?;
        let i = build_i(n).unwrap();
        let iso = find_isomorphism(&inv, &i, DEFAULT_ISO_BOUND).map_err(|e| e.to_string())?;
        ensure(iso.is_some_and(|m| is_isomorphism(&inv, &i, &m)), || {
            format!("Inv(PT_{}) is not isomorphic to I_{}", n, n)
        })?;
    }
    Ok("Inv(PT_n) = I_n for n = 1, 2, 3".into())
}

fn c3_companion() -> Outcome {
    let e1 = etale_of(&build_i(1).unwrap()).map_err(|e| e.to_string())?;
    ensure(e1.monoid.size() == 2, || format!("Etale(I_1) has {} elements", e1.monoid.size()))?;
    let e2 = etale_of(&build_i(2).unwrap()).map_err(|e| e.to_string())?;
    ensure(e2.monoid.size() == 9, || format!("Etale(I_2) has {} elements", e2.monoid.size()))?;
    let pt2 = build_pt(2).unwrap();
    let iso = find_isomorphism(&e2.monoid, &pt2, DEFAULT_ISO_BOUND).map_err(|e| e.to_string())?;
    ensure(iso.is_some(), || "Etale(I_2) is not isomorphic to PT_2".into())?;
    Ok("|Etale(I_1)| = 2, |Etale(I_2)| = 9, Etale(I_2) = PT_2".into())
}

fn c4_main_theorem() -> Outcome {
    let corpus = [
        two_element(),
        build_i(2).unwrap(),
        build_i(3).unwrap(),
        build_boolean_algebra(2).unwrap(),
    ];
    let mut sizes = Vec::new();
    for m in &corpus {
        let r = verify_inv_iso(m).map_err(|e| e.to_string())?;
        ensure(r.isomorphic(), || format!("{}: {:?}", m.name(), r))?;
        sizes.push(format!("{}->{}", m.name(), r.companion_size));
    }
    Ok(format!("M = Inv(Etale(M)) for {}", sizes.join(", ")))
}

fn c5_fixed_point() -> Outcome {
    let corpus = [
        (two_element(), Some(true)),
        (build_boolean_algebra(2).unwrap(), Some(true)),
        (build_i(2).unwrap(), Some(false)),
        (build_i(3).unwrap(), None),
    ];
    for (m, expected) in &corpus {
        let r = fixed_point_check(m).map_err(|e| e.to_string())?;
        ensure(r.agree(), || format!("{}: the two criteria disagree: {:?}", m.name(), r))?;
        if let Some(want) = expected {
            ensure(r.holds() == *want, || format!("{}: expected {}, got {:?}", m.name(), want, r))?;
        }
    }
    Ok("Boolean algebras are fixed points, I_2 is not; both criteria agree on all 4 entries".into())
}

fn c6_nucleus() -> Outcome {
    let i2 = build_i(2).unwrap();
    let r = completion(&i2, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let nu = closure_nucleus(&i2, &r).map_err(|e| e.to_string())?;
    let report = check_nucleus(&r.monoid, &nu);
    ensure(report.passed, || format!("{:?}", report.first_violation))?;
    Ok(format!("N1-N6 hold on all {} acceptable sets of I_2", r.monoid.size()))
}

fn c7_universal() -> Outcome {
    let i2 = build_i(2).unwrap();
    let r = completion(&i2, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let ext = universal_extension(&i2, &r, &r.monoid, &r.iota).map_err(|e| e.to_string())?;
    ensure(ext.passed(), || format!("{:?}", ext))?;
    ensure(ext.beta.iter().enumerate().all(|(i, &b)| i == b), || "beta is not the identity".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let rejected = rejected_perturbations(&r, &r.monoid, &r.iota, &ext.beta, 100, &mut rng);
    ensure(rejected == 100, || format!("only {}/100 perturbations rejected", rejected))?;
    Ok("beta o iota = iota; 100/100 perturbations rejected".into())
}

fn c8_polycyclic() -> Outcome {
    let words = Word::all_up_to(2, 2);
    let maps: Vec<BasicMap> = words
        .iter()
        .flat_map(|y| words.iter().map(move |x| BasicMap::new(y.clone(), x.clone())))
        .chain(std::iter::once(BasicMap::Zero))
        .collect();
    let mut products = 0usize;
    for f in &maps {
        for g in &maps {
            let fg = f.mul(g);
            for h in &maps {
                products += 1;
                ensure(fg.mul(h) == f.mul(&g.mul(h)), || format!("({})({})({}) not associative", f, g, h))?;
            }
        }
    }
    let words3 = Word::all_up_to(2, 3);
    let mut pairs = 0;
    for i in 0..words3.len() {
        for j in i + 1..words3.len() {
            let pair = [words3[i].clone(), words3[j].clone()];
            pairs += 1;
            ensure(orthogonal_set_check(&pair) == is_prefix_code(&pair), || {
                format!("orthogonality and prefix code disagree on {{{}, {}}}", pair[0], pair[1])
            })?;
        }
    }
    Ok(format!("{} triples associative; {} word pairs agree", products, pairs))
}

/// Equality by probing: independent of the reduced normal form.
fn same(f: &TableMap, g: &TableMap) -> bool {
    f.same_function(g)
}

fn rr_failure(s: &TableMap, t: &TableMap) -> Option<&'static str> {
    let (ss, ts) = (s.star(), t.star());
    if !same(&ss.star(), &ss) {
        return Some("RR1");
    }
    let p = ss.compose(&ts);
    if !same(&p.star(), &p) {
        return Some("RR2");
    }
    if !same(&p, &ts.compose(&ss)) {
        return Some("RR3");
    }
    if !same(&s.compose(&ss), s) {
        return Some("RR4");
    }
    if !same(&s.compose(t).star(), &ss.compose(t).star()) {
        return Some("RR5");
    }
    if !same(&ts.compose(s), &s.compose(&t.compose(s).star())) {
        return Some("RR6");
    }
    None
}

fn c9_h2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..1000 {
        let f = random_table(&mut rng, 2, 4);
        let g = random_table(&mut rng, 2, 4);
        let h = random_table(&mut rng, 2, 4);
        let fail = |what: &str| format!("sample {}: {} (f = {}, g = {}, h = {})", i, what, f, g, h);
        ensure(same(&f.compose(&g).compose(&h), &f.compose(&g.compose(&h))), || fail("associativity"))?;
        if let Some(law) = rr_failure(&f, &g) {
            return Err(fail(law));
        }
        let r = f.reduce();
        ensure(r.reduce() == r, || fail("reduce is not idempotent"))?;
        ensure(f.agrees_on_probes(&r, f.max_word_len() + 1), || fail("reduce changed the function"))?;
        let images: Vec<Word> = f.images().cloned().collect();
        let code = is_prefix_code(&images);
        let inverse_ok = match f.invert() {
            Some(fi) => same(&fi.compose(&f), &f.star()) && same(&f.compose(&fi), &fi.star()),
            None => false,
        };
        ensure(f.is_partial_unit() == code && code == inverse_ok, || fail("partial unit criteria disagree"))?;
    }
    Ok("1000 samples: associativity, RR1-RR6, reduce, partial units; 0 failures".into())
}

fn c10_cantor() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for (n, count, len) in [(2usize, 200usize, 4usize), (3, 50, 3)] {
        for i in 0..count {
            let x = random_total(&mut rng, n, len);
            let alphas = (0..n as u8).map(|k| x.alpha(k)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
            let back = TableMap::lambda_op(&alphas).map_err(|e| e.to_string())?;
            ensure(same(&back, &x), || format!("CA1 fails at n = {}, sample {}: {}", n, i, x))?;
            let parts: Vec<TableMap> = (0..n).map(|_| random_total(&mut rng, n, len)).collect();
            let l = TableMap::lambda_op(&parts).map_err(|e| e.to_string())?;
            for (k, part) in parts.iter().enumerate() {
                let got = l.alpha(k as u8).map_err(|e| e.to_string())?;
                ensure(same(&got, part), || format!("CA2 fails at n = {}, sample {}, i = {}", n, i, k))?;
            }
        }
    }
    // every maximal code with words of length <= 3, images of length <= 1
    let codes: Vec<PrefixCode> = etale_core::words::maximal_codes_by_splitting(2, 8)
        .into_iter()
        .filter(|c| c.words().iter().all(|w| w.len() <= 3))
        .collect();
    let images = Word::all_up_to(2, 1);
    let mut checked = 0usize;
    for code in &codes {
        let k = code.len();
        let mut digits = vec![0usize; k];
        loop {
            let pairs = code.words().iter().cloned().zip(digits.iter().map(|&d| images[d].clone())).collect();
            let f = TableMap::make(2, pairs).map_err(|e| e.to_string())?;
            let term = CantorTerm::term_for(&f).map_err(|e| e.to_string())?;
            let g = term.eval(2).map_err(|e| e.to_string())?;
            ensure(same(&f, &g), || format!("term_for round trip fails on {}", f))?;
            checked += 1;
            let Some(pos) = digits.iter().position(|&d| d + 1 < images.len()) else { break };
            digits[pos] += 1;
            for d in &mut digits[..pos] {
                *d = 0;
            }
        }
    }
    Ok(format!("CA1/CA2 on 200 + 50 samples; term round trip on {} total maps over {} codes", checked, codes.len()))
}

fn c11_endo() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..20 {
        let g = random_total(&mut rng, 2, 4);
        let report = endo_check(&g, 100, 4, &mut rng).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("g #{} = {}: {:?}", i, g, report.first_failure))?;
    }
    Ok("20 random g x 100 samples commute with alpha_i and lambda".into())
}

fn c12_witness() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for i in 0..100 {
        let n = if i % 2 == 0 { 2 } else { 3 };
        let code = random_prefix_code(&mut rng, n, if n == 2 { 4 } else { 3 });
        let a = zero_simplifying_witness(&code).map_err(|e| e.to_string())?;
        let e = TableMap::make(n, code.words().iter().map(|w| (w.clone(), w.clone())).collect())
            .map_err(|e| e.to_string())?;
        ensure(a.is_total(), || format!("witness for {} is not total", code))?;
        ensure(same(&e.compose(&a).star(), &TableMap::identity(n)), || {
            format!("(e a)* is not the identity for {}", code)
        })?;
    }
    Ok("100 random codes over n = 2, 3: (ea)* = 1".into())
}

fn c13_carets() -> Outcome {
    let x = PrefixCode::parse("{a, ba, bb}", 2).map_err(|e| e.to_string())?;
    let b = Word::parse("b", 2).unwrap();
    let a = Word::parse("a", 2).unwrap();
    let reduced = x.caret_reduce(&b).map_err(|e| e.to_string())?;
    let expanded = x.caret_expand(&a).map_err(|e| e.to_string())?;
    ensure(reduced.to_string() == "{a, b}", || format!("reduce gave {}", reduced))?;
    ensure(expanded.to_string() == "{aa, ab, ba, bb}", || format!("expand gave {}", expanded))?;
    Ok(format!("X- = {}, X+ = {}", reduced, expanded))
}

fn c14_reconstruction() -> Outcome {
    let i2 = build_i(2).unwrap();
    let r = completion(&i2, DEFAULT_CAP).map_err(|e| e.to_string())?;
    let c = etale_of(&i2).map_err(|e| e.to_string())?;
    let theta = quotient_map(&i2, &r, &c).map_err(|e| e.to_string())?;
    let report = reconstruct_projection_pure(&r.monoid, &c.monoid, &theta).map_err(|e| e.to_string())?;
    ensure(report.consistent(), || format!("inconsistent report: {:?}", report))?;
    Ok(format!(
        "pure = {}, closed elements = {:?}, isomorphic = {:?}",
        report.pure, report.closed_elements, report.isomorphic
    ))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 14] = [
        ("axiom suite", c1_axioms),
        ("partial units of PT_n", c2_partial_units),
        ("companion of I_n", c3_companion),
        ("partial units of the companion", c4_main_theorem),
        ("fixed points", c5_fixed_point),
        ("nucleus laws", c6_nucleus),
        ("universal property", c7_universal),
        ("P_n arithmetic", c8_polycyclic),
        ("H_2/C_2 suite", c9_h2),
        ("Cantor algebra", c10_cantor),
        ("endomorphisms", c11_endo),
        ("0-simplifying witness", c12_witness),
        ("caret goldens", c13_carets),
        ("reconstruction", c14_reconstruction),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {} ({} ms): {}", i + 1, name, ms, detail),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {} ({} ms): {}", i + 1, name, ms, detail);
            }
        }
    }
    println!(
        "acceptance: {}/{} passed in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
