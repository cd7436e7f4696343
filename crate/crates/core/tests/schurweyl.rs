use superinv::brauer::{coset_reps, overline_embed};
use superinv::enveloping::{eta_prime, is_central, psi_map, Normalizer, PbwElement};
use superinv::freealg::{eta, SymElement, TensorAlgebraElement};
use superinv::liealg::{AlgebraSpec, LieElement};
use superinv::schurweyl::*;
use superinv::signs::Permutation;
use superinv::superlinalg::{all_words, Family, Tensor, VectorTensor};
use superinv::{Error, Scalar};

fn alg(f: Family, m: usize, n: usize) -> AlgebraSpec {
    AlgebraSpec::build(f, m, n).unwrap()
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

fn thetas(a: &AlgebraSpec, k: usize) -> Vec<Permutation> {
    match a.family() {
        Family::Gl | Family::Q => Permutation::all(k).collect(),
        _ => Permutation::all(2 * k).collect(),
    }
}

fn tensor_of(factors: &[LieElement], coeff: &Scalar) -> TensorAlgebraElement {
    let mut terms: Vec<(Vec<usize>, Scalar)> = vec![(Vec::new(), coeff.clone())];
    for f in factors {
        let mut next = Vec::new();
        for (w, c) in &terms {
            for (g, gc) in f.terms() {
                let mut nw = w.clone();
                nw.push(*g);
                next.push((nw, c * gc));
            }
        }
        terms = next;
    }
    TensorAlgebraElement::from_terms(terms)
}

#[test]
fn every_theta_is_invariant_and_every_z_central() {
    let cases = [
        (alg(Family::Gl, 1, 1), 3),
        (alg(Family::Q, 2, 2), 3),
        (alg(Family::Osp, 1, 1), 2),
        (alg(Family::Osp, 2, 1), 2),
        (alg(Family::P, 2, 2), 2),
    ];
    for (a, kmax) in &cases {
        for k in 1..=*kmax {
            for sigma in thetas(a, k) {
                let t = theta(a, &sigma).unwrap();
                assert!(commutes_with_action(a, &t).unwrap(), "{} {sigma}", a.label());
                let z = z_sigma(a, &sigma).unwrap();
                assert!(is_central(a, &z), "{} {sigma}", a.label());
            }
        }
    }
}

#[test]
fn brauer_theta_formula_agrees_with_coset_reduction() {
    for a in [alg(Family::Osp, 1, 1), alg(Family::P, 2, 2)] {
        for k in 1..=2 {
            for sigma in Permutation::all(2 * k) {
                let raw = theta_brauer_inverse_raw(a.space(), &sigma.inverse()).unwrap();
                assert_eq!(raw, theta_brauer(a.space(), &sigma).unwrap(), "{} {sigma}", a.label());
            }
        }
    }
}

#[test]
fn contraction_examples() {
    let o = alg(Family::Osp, 1, 1);
    let e = contraction_operator(o.space(), 1, 2).unwrap();
    assert_eq!(e.compose(&e).unwrap(), e.scale(&Scalar::from_int(-1)));
    let p = alg(Family::P, 2, 2);
    let e = contraction_operator(p.space(), 1, 2).unwrap();
    assert!(e.compose(&e).unwrap().is_zero());
    let s = perm_operator(p.space(), &Permutation::transposition(2, 0, 1)).unwrap();
    assert_eq!(s.compose(&e).unwrap(), e.scale(&Scalar::from_int(-1)));
    assert!(matches!(contraction_operator(alg(Family::Gl, 1, 1).space(), 1, 2), Err(Error::Unsupported { .. })));
    assert!(contraction_operator(o.space(), 2, 2).is_err());
}

#[test]
fn clifford_examples() {
    let q = alg(Family::Q, 2, 2);
    let c1 = clifford_operator(q.space(), 1, 2).unwrap();
    let c2 = clifford_operator(q.space(), 2, 2).unwrap();
    assert_eq!(c1.compose(&c1).unwrap(), Tensor::identity(q.space().clone(), 2));
    assert!(c1.compose(&c2).unwrap().add(&c2.compose(&c1).unwrap()).unwrap().is_zero());
    assert!(commutes_with_action(&q, &c1).unwrap());
    assert!(clifford_operator(alg(Family::Gl, 1, 1).space(), 1, 1).is_err());
}

#[test]
fn perm_operator_examples() {
    let g = alg(Family::Gl, 1, 1);
    let id = perm_operator(g.space(), &Permutation::identity(2)).unwrap();
    assert_eq!(id, Tensor::identity(g.space().clone(), 2));
    let s = perm_operator(g.space(), &Permutation::transposition(2, 0, 1)).unwrap();
    let v = VectorTensor::basis(g.space().clone(), vec![0, 1]);
    assert_eq!(s.apply(&v).unwrap(), VectorTensor::basis(g.space().clone(), vec![1, 0]));
    assert_eq!(theta_glq(g.space(), &Permutation::transposition(2, 0, 1)).unwrap(), s);
}

/// `theta_(12..k) = sum_I (-1)^{|i_1|+..+|i_{k-1}|} e_{i_k i_1} (x) e_{i_1 i_2} (x) .. (x) e_{i_{k-1} i_k}`.
fn cycle_oracle(a: &AlgebraSpec, k: usize) -> Tensor {
    let sp = a.space();
    let items = all_words(sp.dim(), k).into_iter().map(|w| {
        let odd = w[..k - 1].iter().fold(0, |x, &i| x ^ sp.parity(i)) == 1;
        let unit: Vec<(usize, usize)> = (0..k)
            .map(|t| if t == 0 { (w[k - 1], w[0]) } else { (w[t - 1], w[t]) })
            .collect();
        (unit, Scalar::sign(odd))
    });
    Tensor::from_entries(sp.clone(), k, items).unwrap()
}

#[test]
fn theta_of_long_cycle_matches_closed_form() {
    for a in [alg(Family::Gl, 1, 1), alg(Family::Gl, 2, 1), alg(Family::Q, 2, 2)] {
        for k in 1..=4 {
            assert_eq!(theta_glq(a.space(), &Permutation::long_cycle(k)).unwrap(), cycle_oracle(&a, k));
        }
    }
}

#[test]
fn gl11_transposition_z_matches_explicit_sum() {
    let a = alg(Family::Gl, 1, 1);
    let gen = |i: usize, j: usize| *a.family_element(i, j).unwrap().terms().keys().next().unwrap();
    let sp = a.space();
    let mut norm = Normalizer::new(&a);
    let words = all_words(2, 2)
        .into_iter()
        .map(|w| (vec![gen(w[1], w[0]), gen(w[0], w[1])], Scalar::sign(sp.parity(w[0]) == 1)));
    let expected = norm.normalize_terms(words);
    assert_eq!(z_sigma(&a, &Permutation::transposition(2, 0, 1)).unwrap(), expected);
}

#[test]
fn identity_brauer_thetas() {
    for a in [alg(Family::Osp, 1, 1), alg(Family::P, 2, 2)] {
        let t = theta(&a, &Permutation::identity(2)).unwrap();
        assert_eq!(t, Tensor::identity(a.space().clone(), 1));
        assert!(eta(&a, &pi_tensor(&a, &t).unwrap()).is_zero());
    }
}

#[test]
fn periplectic_worked_example() {
    let a = alg(Family::P, 2, 2);
    let sp = a.space();
    let sigma = Permutation::parse("(2 3)(4 5)", 6).unwrap();
    let got = pi_tensor(&a, &theta(&a, &sigma.inverse()).unwrap()).unwrap();
    let eighth = Scalar::ratio(1, 8);
    let mut expected = TensorAlgebraElement::zero();
    for w in all_words(sp.dim(), 3) {
        let (i1, i2, i3) = (w[0], w[1], w[2]);
        let p = |i: usize| sp.parity(i);
        let odd = (p(sp.prime(i2)) ^ p(i3) ^ (p(i1) & p(i2)) ^ (p(i2) & p(i3))) == 1;
        let factors = [
            a.family_element(i1, sp.prime(i2)).unwrap(),
            a.family_element(sp.prime(i1), sp.prime(i3)).unwrap(),
            a.family_element(sp.prime(i2), i3).unwrap(),
        ];
        expected = expected.add(&tensor_of(&factors, &(&Scalar::sign(odd) * &eighth)));
    }
    assert!(!got.is_zero());
    assert_eq!(got, expected);
    assert!(eta(&a, &got).is_zero());
}

#[test]
fn vanishing_and_scalar_z() {
    let q = alg(Family::Q, 2, 2);
    assert!(z_sigma(&q, &Permutation::transposition(2, 0, 1)).unwrap().is_zero());
    assert!(z_sigma(&q, &Permutation::long_cycle(4)).unwrap().is_zero());
    let p = alg(Family::P, 2, 2);
    for sigma in Permutation::all(4) {
        assert!(z_sigma(&p, &sigma).unwrap().is_scalar(), "{sigma}");
    }
    for k in 1..=3 {
        for r in coset_reps(k).unwrap() {
            assert!(eta(&p, &pi_tensor(&p, &theta(&p, &r).unwrap()).unwrap()).is_zero());
        }
    }
}

#[test]
fn gelfand_invariants() {
    let a = alg(Family::Gl, 1, 1);
    let e11 = PbwElement::generator(a.find("E[1,1]").unwrap());
    let e22 = PbwElement::generator(a.find("E[2,2]").unwrap());
    assert_eq!(str_gelfand(&a, 1).unwrap(), e11.add(&e22));
    for a in [alg(Family::Gl, 1, 1), alg(Family::Gl, 2, 1)] {
        for k in 1..=3 {
            let s = str_gelfand(&a, k).unwrap();
            let cycle = Permutation::long_cycle(k);
            assert_eq!(s, z_sigma(&a, &cycle).unwrap(), "{} k={k}", a.label());
            let inverse_form = z_sigma(&a, &cycle.inverse()).unwrap();
            assert_eq!(s == inverse_form, k <= 2, "{} k={k}", a.label());
        }
    }
    let o = alg(Family::Osp, 1, 1);
    let f2 = str_gelfand(&o, 2).unwrap();
    assert!(is_central(&o, &f2) && !f2.is_zero());
}

#[test]
fn supertransposed_pipeline_matches_matrix_trace() {
    let a = alg(Family::Gl, 1, 1);
    for k in 1..=2 {
        for sigma in Permutation::all(k) {
            let s = theta(&a, &sigma).unwrap();
            let lhs = eta_prime(&a, &pi_tensor(&a, &s.supertranspose()).unwrap());
            let rhs = molev_element(&a, &s, &vec![Scalar::zero(); k]).unwrap();
            assert_eq!(lhs, rhs, "{sigma}");
        }
    }
}

#[test]
fn molev_examples() {
    let a = alg(Family::Gl, 2, 1);
    let id = Tensor::identity(a.space().clone(), 1);
    let u = Scalar::from_int(3);
    let got = molev_element(&a, &id, std::slice::from_ref(&u)).unwrap();
    let mut expected = PbwElement::scalar(&u * &Scalar::from_int(1));
    for i in 0..3 {
        expected = expected.add(&PbwElement::from_lie(&a.family_element(i, i).unwrap()));
    }
    assert_eq!(got, expected);
    assert!(is_central(&a, &got));
    let zero = Tensor::zero(a.space().clone(), 2);
    assert!(molev_element(&a, &zero, &[Scalar::one(), Scalar::one()]).unwrap().is_zero());
    let not_invariant = Tensor::unit(a.space().clone(), vec![(0, 1)]);
    assert_eq!(molev_element(&a, &not_invariant, &[Scalar::zero()]), Err(Error::NotInvariant));
    let t = theta(&a, &Permutation::transposition(2, 0, 1)).unwrap();
    let m = molev_element(&a, &t, &[Scalar::from_int(1), Scalar::ratio(-1, 2)]).unwrap();
    assert!(is_central(&a, &m));
}

#[test]
fn sergeev_elements_and_identity() {
    let q = alg(Family::Q, 2, 2);
    let (e1, f1) = sergeev_elements(&q, 1).unwrap();
    for i in 0..2 {
        for j in 0..2 {
            assert_eq!(e1[i][j], PbwElement::from_lie(&q.family_element(i, j).unwrap()));
            assert_eq!(f1[i][j], PbwElement::from_lie(&q.family_element(i, j + 2).unwrap()));
        }
    }
    let z1 = sergeev_z(&q, 1).unwrap();
    assert_eq!(z1, z_sigma(&q, &Permutation::identity(1)).unwrap());
    let z3 = sergeev_z(&q, 3).unwrap();
    assert_eq!(z3, z_sigma(&q, &Permutation::long_cycle(3)).unwrap().scale(&Scalar::from_int(4)));
    assert!(is_central(&q, &z1) && is_central(&q, &z3));
    assert!(sergeev_z(&alg(Family::Gl, 1, 1), 1).is_err());
}

#[test]
fn relation_reports() {
    let r = check_duality_relations(&alg(Family::Gl, 1, 1), 3).unwrap();
    assert!(r.all_hold);
    assert!(r.relations.iter().any(|x| x.relation == "s1s2s1 = s2s1s2" && x.holds));
    for (f, m, n) in [(Family::Q, 2, 2), (Family::Osp, 1, 1), (Family::P, 2, 2)] {
        let r = check_duality_relations(&alg(f, m, n), 3).unwrap();
        assert!(r.all_hold, "{}", r.algebra);
        assert!(r.commutation.iter().all(|c| c.holds));
    }
    let r = check_duality_relations(&alg(Family::Osp, 3, 1), 2).unwrap();
    assert_eq!(r.delta, Some(Scalar::one()));
    assert!(r.notes.iter().any(|n| n.contains("2m+1-2n")));
    // The printed form e1e2e1 = -e2 cannot hold; e1e2e1 = -e1 does.
    let r = check_duality_relations(&alg(Family::P, 2, 2), 3).unwrap();
    let printed = r.printed_variants.iter().find(|x| x.relation == "e1e2e1 = -e2").unwrap();
    assert!(!printed.holds);
    let standard = r.relations.iter().find(|x| x.relation == "e1e2e1 = -e1").unwrap();
    assert!(standard.holds);
    assert!(check_duality_relations(&alg(Family::Gl, 1, 1), 1).is_err());
}

fn hat_identity(a: &AlgebraSpec, p: &Tensor) -> bool {
    let mut norm = Normalizer::new(a);
    let h = UValuedTensor::hat(a).unwrap();
    let (h1, h2) = (h.place(1, 2).unwrap(), h.place(2, 2).unwrap());
    let p = UValuedTensor::from_tensor(p);
    let lhs = h1.mul(&h2, a, &mut norm).unwrap().sub(&h2.mul(&h1, a, &mut norm).unwrap()).unwrap();
    let rhs = p.mul(&h2, a, &mut norm).unwrap().sub(&h2.mul(&p, a, &mut norm).unwrap()).unwrap();
    lhs == rhs
}

#[test]
fn matrix_presentation_identities() {
    for a in [alg(Family::Gl, 1, 1), alg(Family::Gl, 2, 1)] {
        assert!(hat_identity(&a, &super_transposition(a.space()).unwrap()));
    }
    let o = alg(Family::Osp, 1, 1);
    let pq = super_transposition(o.space()).unwrap().sub(&q_tensor(o.space()).unwrap()).unwrap();
    assert!(hat_identity(&o, &pq));
    assert!(!hat_identity(&o, &super_transposition(o.space()).unwrap()));
}

#[test]
fn conjugacy_average_identity() {
    for a in [alg(Family::Gl, 1, 1), alg(Family::Q, 2, 2)] {
        for k in 1..=3 {
            for s in Permutation::all(k) {
                let lhs = psi_map(&a, &eta(&a, &pi_tensor(&a, &theta(&a, &s).unwrap()).unwrap()));
                let mut acc = PbwElement::zero();
                for t in Permutation::all(k) {
                    acc = acc.add(&z_sigma(&a, &t.inverse().compose(&s).compose(&t)).unwrap());
                }
                assert_eq!(lhs, acc.scale(&Scalar::ratio(1, factorial(k))), "{} {s}", a.label());
            }
        }
    }
    for a in [alg(Family::Osp, 1, 1), alg(Family::Osp, 2, 1)] {
        for s in Permutation::all(4) {
            let lhs = psi_map(&a, &eta(&a, &pi_tensor(&a, &theta(&a, &s).unwrap()).unwrap()));
            let mut acc = PbwElement::zero();
            for t in Permutation::all(2) {
                acc = acc.add(&z_sigma(&a, &overline_embed(&t).compose(&s)).unwrap());
            }
            assert_eq!(lhs, acc.scale(&Scalar::ratio(1, 2)), "{} {s}", a.label());
        }
    }
}

fn standardized_cycles(sigma: &Permutation) -> Vec<Permutation> {
    sigma
        .cycles()
        .into_iter()
        .map(|c| {
            let mut support = c.clone();
            support.sort_unstable();
            let pos = |v: usize| support.iter().position(|&x| x == v).unwrap();
            let mut images = vec![0; c.len()];
            for (i, &v) in c.iter().enumerate() {
                images[pos(v)] = pos(c[(i + 1) % c.len()]);
            }
            Permutation::from_images(images).unwrap()
        })
        .collect()
}

#[test]
fn eta_pi_theta_factors_over_cycles() {
    for a in [alg(Family::Gl, 1, 1), alg(Family::Q, 2, 2)] {
        for k in 3..=4 {
            for s in Permutation::all(k) {
                let cycles = standardized_cycles(&s);
                if k == 4 && cycles.len() < 2 {
                    continue;
                }
                let lhs = eta(&a, &pi_tensor(&a, &theta(&a, &s).unwrap()).unwrap());
                let mut rhs = SymElement::one();
                for c in &cycles {
                    rhs = rhs.mul(&a, &eta(&a, &pi_tensor(&a, &theta(&a, c).unwrap()).unwrap()));
                }
                assert_eq!(lhs, rhs, "{} {s}", a.label());
            }
        }
    }
}
