use std::process::ExitCode;
use std::time::{Duration, Instant};

use superinv::brauer::{
    coset_reps, count_by_type, double_cosets, key_lemma_witness, overline_embed, partitions, type_representative,
};
use superinv::enveloping::{harish_chandra, is_central, is_j_poly, is_supersymmetric, psi_map, CartanPolynomial, Normalizer, PbwElement};
use superinv::freealg::eta;
use superinv::liealg::AlgebraSpec;
use superinv::schurweyl::{
    check_duality_relations, pi_tensor, q_tensor, sergeev_z, str_gelfand, super_transposition, theta, z_sigma,
    UValuedTensor,
};
use superinv::signs::{gamma_sign, p_sign, permute_word, Permutation};
use superinv::superlinalg::{Family, Tensor};
use superinv::{Result, Scalar};

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Verdict { pass, detail: detail.into() }
    }
}

fn alg(f: Family, m: usize, n: usize) -> Result<AlgebraSpec> {
    AlgebraSpec::build(f, m, n)
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

fn centrality_gl() -> Result<Verdict> {
    let start = Instant::now();
    let mut central = 0;
    let mut total = 0;
    let mut cycle_form = true;
    let mut inverse_form = true;
    let mut inverse_breaks = Vec::new();
    for (m, n) in [(1, 1), (2, 1)] {
        let a = alg(Family::Gl, m, n)?;
        for k in 1..=3 {
            for sigma in Permutation::all(k) {
                total += 1;
                central += is_central(&a, &z_sigma(&a, &sigma)?) as usize;
            }
            let s = str_gelfand(&a, k)?;
            let cycle = Permutation::long_cycle(k);
            cycle_form &= s == z_sigma(&a, &cycle)?;
            if s != z_sigma(&a, &cycle.inverse())? {
                inverse_form = false;
                inverse_breaks.push(format!("{} k={k}", a.label()));
            }
        }
    }
    let elapsed = start.elapsed();
    let pass = central == total && inverse_form && elapsed < Duration::from_secs(60);
    Ok(Verdict::new(
        pass,
        format!(
            "{central}/{total} z_sigma central; Str E-hat^k = z_(12..k)^-1: {} (fails at {}); Str E-hat^k = z_(12..k): {cycle_form}; {}",
            inverse_form,
            if inverse_breaks.is_empty() { "none".into() } else { inverse_breaks.join(", ") },
            secs(elapsed)
        ),
    ))
}

fn expected_top_degree(m: usize, n: usize, k: u32) -> CartanPolynomial {
    let vars = CartanPolynomial::standard_vars(m, n);
    let mut p = CartanPolynomial::zero(vars.clone());
    let sign = Scalar::sign(k.is_multiple_of(2));
    for i in 0..m + n {
        let term = CartanPolynomial::var(vars.clone(), i).pow(k);
        p = if i < m { p.add(&term) } else { p.add(&term.scale(&sign)) };
    }
    p
}

fn harish_chandra_gl() -> Result<Verdict> {
    let mut ok = 0;
    let mut total = 0;
    for (m, n) in [(1, 1), (2, 1)] {
        let a = alg(Family::Gl, m, n)?;
        for k in 1..=3u32 {
            total += 1;
            let poly = harish_chandra(&a, &str_gelfand(&a, k as usize)?)?;
            let good = is_supersymmetric(&poly, m, n) && poly.top_degree_part() == expected_top_degree(m, n, k);
            ok += good as usize;
        }
    }
    Ok(Verdict::new(ok == total, format!("{ok}/{total} images supersymmetric with the expected top-degree part")))
}

fn conjugacy_average() -> Result<Verdict> {
    let mut ok = 0;
    let mut total = 0;
    for a in [alg(Family::Gl, 1, 1)?, alg(Family::Q, 2, 2)?] {
        for k in 1..=3 {
            for s in Permutation::all(k) {
                let lhs = psi_map(&a, &eta(&a, &pi_tensor(&a, &theta(&a, &s)?)?));
                let mut acc = PbwElement::zero();
                for t in Permutation::all(k) {
                    acc = acc.add(&z_sigma(&a, &t.inverse().compose(&s).compose(&t))?);
                }
                total += 1;
                ok += (lhs == acc.scale(&Scalar::ratio(1, factorial(k)))) as usize;
            }
        }
    }
    for a in [alg(Family::Osp, 1, 1)?, alg(Family::Osp, 2, 1)?] {
        for s in Permutation::all(4) {
            let lhs = psi_map(&a, &eta(&a, &pi_tensor(&a, &theta(&a, &s)?)?));
            let mut acc = PbwElement::zero();
            for t in Permutation::all(2) {
                acc = acc.add(&z_sigma(&a, &overline_embed(&t).compose(&s))?);
            }
            total += 1;
            ok += (lhs == acc.scale(&Scalar::ratio(1, 2))) as usize;
        }
    }
    Ok(Verdict::new(ok == total, format!("{ok}/{total} identities on gl(1|1), q(2), osp(1|2), osp(2|2)")))
}

fn queer() -> Result<Verdict> {
    let q = alg(Family::Q, 2, 2)?;
    let vanish = z_sigma(&q, &Permutation::long_cycle(2))?.is_zero() && z_sigma(&q, &Permutation::long_cycle(4))?.is_zero();
    let z1 = sergeev_z(&q, 1)?;
    let z3 = sergeev_z(&q, 3)?;
    let z1_ok = z1 == z_sigma(&q, &Permutation::identity(1))?;
    let z3_ok = z3 == z_sigma(&q, &Permutation::long_cycle(3))?.scale(&Scalar::from_int(4));
    let central = is_central(&q, &z1) && is_central(&q, &z3);
    Ok(Verdict::new(
        vanish && z1_ok && z3_ok && central,
        format!("even cycles vanish: {vanish}; Z1 = z_(1): {z1_ok}; Z3 = 4 z_(123): {z3_ok}; central: {central}"),
    ))
}

fn orthosymplectic() -> Result<Verdict> {
    let start = Instant::now();
    let a = alg(Family::Osp, 3, 1)?;
    let (m, n) = a.cartan_split();
    let mut parts = Vec::new();
    let mut pass = true;
    for k in [2, 4] {
        let f = str_gelfand(&a, k)?;
        let central = is_central(&a, &f);
        let j = is_j_poly(&harish_chandra(&a, &f)?, m, n);
        pass &= central && j && !f.is_zero();
        parts.push(format!("Str F-hat^{k} central: {central}, J-polynomial: {j}"));
    }
    let elapsed = start.elapsed();
    pass &= elapsed < Duration::from_secs(300);
    Ok(Verdict::new(pass, format!("osp(3|2): {}; {}", parts.join("; "), secs(elapsed))))
}

fn periplectic() -> Result<Verdict> {
    let start = Instant::now();
    let mut ok = 0;
    let mut total = 0;
    for n in [2, 3] {
        let a = alg(Family::P, n, n)?;
        for k in 1..=3 {
            for r in coset_reps(k)? {
                let t = theta(&a, &r)?;
                total += 1;
                let zero = eta(&a, &pi_tensor(&a, &t)?).is_zero();
                ok += (zero && z_sigma(&a, &r)?.is_scalar()) as usize;
            }
        }
    }
    let p2 = alg(Family::P, 2, 2)?;
    let sigma = Permutation::parse("(2 3)(4 5)", 6)?;
    let nonzero = !pi_tensor(&p2, &theta(&p2, &sigma.inverse())?)?.is_zero();
    let elapsed = start.elapsed();
    Ok(Verdict::new(
        ok == total && nonzero && elapsed < Duration::from_secs(600),
        format!("{ok}/{total} coset representatives trivial on p(2), p(3); pi(theta) for (23)(45)^-1 nonzero in T(p_2): {nonzero}; {}", secs(elapsed)),
    ))
}

fn key_lemma() -> Result<Verdict> {
    let mut sigmas: Vec<Permutation> = Permutation::all(4).chain(Permutation::all(6)).collect();
    sigmas.extend(partitions(4).iter().map(|t| type_representative(4, t)));
    let mut ok = 0;
    for s in &sigmas {
        let (w, _) = key_lemma_witness(s)?;
        ok += (w.verify(s) && w.sign_product_negative()) as usize;
    }
    let sigma = Permutation::parse("(2 3)(4 5)", 6)?;
    let (w, _) = key_lemma_witness(&sigma)?;
    let example = w.h.tau() == Permutation::parse("(5 6)", 6)?
        && w.h.g == Permutation::parse("(1 2)", 3)?
        && w.h1.tau() == Permutation::parse("(1 2)", 6)?
        && w.h1.g == Permutation::parse("(2 3)", 3)?;
    Ok(Verdict::new(
        ok == sigmas.len() && example,
        format!("{ok}/{} witnesses verified (S_4, S_6, types of S_8); (23)(45) gives tau=(56), g=(12), tau1=(12), g1=(23): {example}", sigmas.len()),
    ))
}

fn brauer_counting() -> Result<Verdict> {
    let mut counts = true;
    for k in 1..=6 {
        counts &= count_by_type(k)?.all_match;
    }
    let mut cosets = true;
    for k in 1..=4 {
        cosets &= double_cosets(k)?.all_match;
    }
    Ok(Verdict::new(
        counts && cosets,
        format!("type counts and (2k-1)!! totals for k<=6: {counts}; double-coset sizes for k<=4: {cosets}"),
    ))
}

fn relation_suites() -> Result<Verdict> {
    let mut pass = true;
    let mut parts = Vec::new();
    for (f, m, n) in [(Family::Gl, 1, 1), (Family::Q, 1, 1), (Family::Osp, 1, 1), (Family::P, 1, 1)] {
        let a = alg(f, m, n)?;
        let r = check_duality_relations(&a, 3)?;
        let standard = r.relations.iter().all(|x| x.holds);
        let commute = r.commutation.iter().all(|x| x.holds);
        let failed: Vec<&str> = r.printed_variants.iter().filter(|x| !x.holds).map(|x| x.relation.as_str()).collect();
        pass &= standard && commute && failed.is_empty();
        let mut part = format!("{}: standard relations {standard}, commutation {commute}", r.algebra);
        if !failed.is_empty() {
            part.push_str(&format!(", printed {} fail", failed.join(" and ")));
        }
        if f == Family::Osp {
            let expected = Scalar::from_int(m as i64 - 2 * n as i64);
            let delta_ok = r.delta.as_ref() == Some(&expected);
            let flagged = r.notes.iter().any(|x| x.contains("2m+1-2n") && x.contains("m-2n"));
            pass &= delta_ok && flagged;
            part.push_str(&format!(", delta = m-2n: {delta_ok}, parameter discrepancy flagged: {flagged}"));
        }
        parts.push(part);
    }
    Ok(Verdict::new(pass, parts.join("; ")))
}

fn hat_identity(a: &AlgebraSpec, p: &Tensor) -> Result<bool> {
    let mut norm = Normalizer::new(a);
    let h = UValuedTensor::hat(a)?;
    let (h1, h2) = (h.place(1, 2)?, h.place(2, 2)?);
    let p = UValuedTensor::from_tensor(p);
    let lhs = h1.mul(&h2, a, &mut norm)?.sub(&h2.mul(&h1, a, &mut norm)?)?;
    let rhs = p.mul(&h2, a, &mut norm)?.sub(&h2.mul(&p, a, &mut norm)?)?;
    Ok(lhs == rhs)
}

fn matrix_presentation() -> Result<Verdict> {
    let mut parts = Vec::new();
    let mut pass = true;
    for (m, n) in [(1, 1), (2, 1)] {
        let a = alg(Family::Gl, m, n)?;
        let ok = hat_identity(&a, &super_transposition(a.space())?)?;
        pass &= ok;
        parts.push(format!("{}: {ok}", a.label()));
    }
    let o = alg(Family::Osp, 1, 1)?;
    let pq = super_transposition(o.space())?.sub(&q_tensor(o.space())?)?;
    let ok = hat_identity(&o, &pq)?;
    pass &= ok;
    parts.push(format!("{} with P-Q: {ok}", o.label()));
    Ok(Verdict::new(pass, parts.join("; ")))
}

fn parity_words(len: usize) -> Vec<Vec<u8>> {
    (0..1usize << len).map(|mask| (0..len).map(|i| ((mask >> i) & 1) as u8).collect()).collect()
}

fn sign_calculus() -> Result<Verdict> {
    let mut lemma = true;
    let mut cocycle = true;
    let mut invariance = true;
    for len in 1..=4 {
        let words = parity_words(len);
        for sigma in Permutation::all(len) {
            let inv = sigma.inverse();
            for u in &words {
                let u_s = permute_word(&inv, u, |&p| p)?.1;
                invariance &= p_sign(u, u)? == p_sign(&u_s, &u_s)?;
                for v in &words {
                    let v_s = permute_word(&inv, v, |&p| p)?.1;
                    let sum: Vec<u8> = u.iter().zip(v).map(|(a, b)| a ^ b).collect();
                    let rhs = p_sign(u, v)? * p_sign(&u_s, &v_s)? * gamma_sign(u, &sigma)? * gamma_sign(v, &sigma)?;
                    lemma &= gamma_sign(&sum, &sigma)? == rhs;
                }
            }
        }
        for x in &words {
            for y in &words {
                let mut odd = 0u8;
                for i in 0..len {
                    odd ^= x[i] & y[i];
                    for j in 0..len {
                        odd ^= x[i] & y[j];
                    }
                }
                cocycle &= p_sign(x, y)? * p_sign(y, x)? == Scalar::sign(odd == 1);
            }
        }
    }
    Ok(Verdict::new(
        lemma && cocycle && invariance,
        format!("gamma lemma: {lemma}; cocycle identity: {cocycle}; p(v,v) invariance: {invariance} (word length <= 4)"),
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Result<Verdict>); 11] = [
        ("centrality (gl)", centrality_gl),
        ("Harish-Chandra (gl)", harish_chandra_gl),
        ("conjugacy-average identity", conjugacy_average),
        ("q(n) vanishing and Sergeev elements", queer),
        ("osp Gelfand invariants", orthosymplectic),
        ("p(n) triviality", periplectic),
        ("Key Lemma", key_lemma),
        ("Brauer counting", brauer_counting),
        ("Schur-Weyl relation suites", relation_suites),
        ("matrix-presentation identities", matrix_presentation),
        ("sign-calculus properties", sign_calculus),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let verdict = check().unwrap_or_else(|e| Verdict::new(false, format!("error: {e}")));
        failures += !verdict.pass as usize;
        println!("[{}] {:>2}. {name}: {}", if verdict.pass { "PASS" } else { "FAIL" }, i + 1, verdict.detail);
    }
    println!("acceptance: {}/{} criteria pass", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
