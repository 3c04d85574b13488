//! Verification suites behind `jackd check`.

use clap::ValueEnum;
use jackd_core::colored::{
    jack_derangement_number, marked_fixed_point_counts, subcube_fixing_derangements,
    subcube_fixing_formula, HYPEROCTAHEDRAL_CAP, PERMUTATION_CAP,
};
use jackd_core::exactalg::{factorial, falling_factorial_expand, int, rat, ratio, sign};
use jackd_core::graphcheck::{verify_spectrum, MATCHING_GRAPH_CAP, PERM_GRAPH_CAP};
use jackd_core::hooks::{
    bold_h, column_removal_sum, f_star, falling_coeffs, first_row_hooks, minor, minor_sum,
    principal_lower_product, remove_last_columns,
};
use jackd_core::jack_oracle::{class_size, syt_count};
use jackd_core::partitions::{dominates, partitions_of, DEFAULT_PARTITION_CAP};
use jackd_core::spectra::{
    eta, eta1_closed, eta1_det, eta2_closed, eta2_doubly_even, eta2_two_row, eta_alpha0,
    eta_minor_sum, eta_rencontres,
};
use jackd_core::transversals::shifted_jack_onerow;
use jackd_core::{AlphaPoly, Partition, Rational};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::cache::CharacterCache;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Main,
    Signs,
    Kuwales,
    Extrema,
    Graphs,
    Identities,
    Alpha2,
}

impl Suite {
    const EACH: [Suite; 7] = [
        Suite::Main,
        Suite::Signs,
        Suite::Kuwales,
        Suite::Extrema,
        Suite::Graphs,
        Suite::Identities,
        Suite::Alpha2,
    ];

    fn default_max_n(self) -> usize {
        match self {
            Suite::Main | Suite::All => 6,
            Suite::Signs | Suite::Kuwales | Suite::Extrema => 9,
            Suite::Graphs => 5,
            Suite::Identities => 12,
            Suite::Alpha2 => 8,
        }
    }

    fn max_n_cap(self) -> usize {
        match self {
            Suite::Graphs => MATCHING_GRAPH_CAP.min(PERM_GRAPH_CAP),
            Suite::Main | Suite::Alpha2 => PERMUTATION_CAP,
            _ => DEFAULT_PARTITION_CAP,
        }
    }
}

impl std::fmt::Display for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(
            self.to_possible_value()
                .expect("no skipped variants")
                .get_name(),
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub suite: Suite,
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub max_n: Option<usize>,
    pub pass: bool,
    pub results: Vec<Outcome>,
}

impl Report {
    pub fn pass(&self) -> bool {
        self.pass
    }
}

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn text(e: jackd_core::Error) -> String {
    e.to_string()
}

fn signed_d(l: &Partition) -> Result<AlphaPoly, String> {
    Ok(jack_derangement_number(l)
        .map_err(text)?
        .scale(&sign(l.size() - l.first())))
}

/// Runs the suite for every n up to its bound. An `Err` is a usage or cap
/// error, a failed check is reported in the outcomes.
pub fn run(suite: Suite, max_n: Option<usize>, cache: &CharacterCache) -> Result<Report, String> {
    let suites: Vec<Suite> = if suite == Suite::All {
        Suite::EACH.to_vec()
    } else {
        vec![suite]
    };
    for &s in &suites {
        if let Some(n) = max_n.filter(|&n| n > s.max_n_cap()) {
            return Err(format!(
                "max-n = {n} exceeds the cap of {} for the {s} suite",
                s.max_n_cap()
            ));
        }
    }
    let mut results = Vec::new();
    for s in suites {
        let top = max_n.unwrap_or(s.default_max_n());
        let per_n: Vec<(usize, String)> = match s {
            Suite::Graphs => {
                for alpha in [1, 2] {
                    for n in 1..=top {
                        let r = verify_spectrum(n, alpha).map_err(text)?;
                        let worst = r.entries.iter().map(|e| e.max_residual).fold(0.0, f64::max);
                        results.push(Outcome {
                            suite: s,
                            name: format!("alpha={alpha} n={n}"),
                            pass: r.pass,
                            detail: format!(
                                "{} vertices, {} distinct eigenvalues, {} unmatched, residual {worst:.0e}",
                                r.vertices,
                                r.entries.len(),
                                r.unmatched
                            ),
                        });
                    }
                }
                continue;
            }
            Suite::Extrema => (6..=top).map(|n| (n, format!("n={n}"))).collect(),
            _ => (0..=top).map(|n| (n, format!("n={n}"))).collect(),
        };
        let check = |n: usize| -> Result<(Check, usize), String> {
            let shapes = partitions_of(n).map_err(text)?;
            let outcome = match s {
                Suite::Main => main_routes(&shapes, n, cache)?,
                Suite::Signs => signs(&shapes),
                Suite::Kuwales => ku_wales(&shapes),
                Suite::Extrema => extrema(&shapes, n),
                Suite::Identities => shapes
                    .iter()
                    .filter(|l| l.first() <= 6)
                    .try_for_each(identities),
                Suite::Alpha2 => alpha2(&shapes, n),
                Suite::All | Suite::Graphs => unreachable!("handled above"),
            };
            Ok((outcome, shapes.len()))
        };
        for (n, name) in per_n {
            let (outcome, count) = check(n)?;
            results.push(Outcome {
                suite: s,
                name,
                pass: outcome.is_ok(),
                detail: outcome.err().unwrap_or_else(|| format!("{count} shapes")),
            });
        }
    }
    Ok(Report {
        suite,
        max_n,
        pass: results.iter().all(|o| o.pass),
        results,
    })
}

fn main_routes(shapes: &[Partition], n: usize, cache: &CharacterCache) -> Result<Check, String> {
    let table = cache.table(n).map_err(text)?;
    let fixed_point_free: Vec<&Partition> = table
        .shapes
        .iter()
        .filter(|m| m.fixed_point_free())
        .collect();
    let (one, two) = (rat(1), rat(2));
    Ok(shapes.iter().try_for_each(|l| {
        let colored = eta(l).map_err(text)?;
        let minors = eta_minor_sum(l);
        let rencontres = eta_rencontres(l, n).map_err(text)?;
        ensure(colored == minors && colored == rencontres, || {
            format!("{l}: colored {colored}, minors {minors}, rencontres {rencontres}")
        })?;
        let total = fixed_point_free
            .iter()
            .map(|mu| int(class_size(mu) * table.get(l, mu).expect("shape is in the table")))
            .fold(Rational::zero(), |acc, x| acc + x);
        let characters = total / int(syt_count(l));
        let at1 = colored.eval(&one);
        ensure(
            characters == at1 && eta1_closed(l) == at1 && eta1_det(l) == at1,
            || format!("{l}: alpha=1 routes disagree, characters {characters}, colored {at1}"),
        )?;
        let at2 = colored.eval(&two);
        ensure(eta2_closed(l) == at2, || {
            format!("{l}: alpha=2 closed form {}, colored {at2}", eta2_closed(l))
        })
    }))
}

fn sample_alphas() -> [Rational; 5] {
    [rat(0), ratio(1, 2), rat(1), rat(2), rat(3)]
}

fn signs(shapes: &[Partition]) -> Check {
    for l in shapes {
        let p = eta_minor_sum(l);
        let even = (l.size() - l.first()) % 2 == 0;
        for a in sample_alphas() {
            let v = p.eval(&a);
            let ok = if l.size() < 2 || a.is_zero() {
                v.is_zero() || v.is_positive() == even
            } else {
                !v.is_zero() && v.is_positive() == even
            };
            ensure(ok, || format!("sign of {l} at alpha={a}: {v}"))?;
        }
        ensure(p.eval(&rat(0)) == eta_alpha0(l), || {
            format!("{l}: alpha=0 product form")
        })?;
    }
    Ok(())
}

fn ku_wales(shapes: &[Partition]) -> Check {
    let polys: Vec<AlphaPoly> = shapes.iter().map(eta_minor_sum).collect();
    for a in sample_alphas() {
        let vals: Vec<Rational> = polys.iter().map(|p| p.eval(&a).abs()).collect();
        for (mu, vm) in shapes.iter().zip(&vals) {
            for (l, vl) in shapes.iter().zip(&vals) {
                if mu.first() == l.first() && dominates(l, mu).map_err(text)? {
                    ensure(vm <= vl, || {
                        format!("|eta| of {mu} exceeds {l} at alpha={a}")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn extrema(shapes: &[Partition], n: usize) -> Check {
    let row = Partition::row(n);
    let hook = Partition::new(vec![n - 1, 1]).map_err(text)?;
    for a in [rat(1), rat(2), rat(3)] {
        let vals: Vec<Rational> = shapes.iter().map(|l| eta_minor_sum(l).eval(&a)).collect();
        let at = |target: &Partition| {
            vals[shapes
                .iter()
                .position(|l| l == target)
                .expect("shape listed")]
            .clone()
        };
        let (top, bottom) = (at(&row), at(&hook));
        for (l, v) in shapes.iter().zip(&vals) {
            if *l != row && *l != hook {
                ensure(*v < top && *v > bottom && v.abs() < bottom.abs(), || {
                    format!("{l} at alpha={a}: {v} not strictly between {bottom} and {top}")
                })?;
            }
        }
        ensure(bottom.abs() < top, || {
            format!("hook dominates the row at alpha={a}")
        })?;
        if n >= 4 {
            let bound = principal_lower_product(&row).eval(&a);
            ensure(top.clone() * rat(3) > bound, || {
                format!("lower bound fails at alpha={a}")
            })?;
        }
    }
    Ok(())
}

fn identities(l: &Partition) -> Check {
    if l.is_empty() {
        return Ok(());
    }
    let a = AlphaPoly::alpha();
    let n1 = l.first();
    let h = principal_lower_product(l);
    let hooks = first_row_hooks(l);
    let minor_h =
        |cols: &[usize]| principal_lower_product(&minor(l, cols).expect("columns are in range"));

    let rhs: AlphaPoly =
        (1..n1).map(|i| &a * &minor_h(&[i])).sum::<AlphaPoly>() + &hooks[n1 - 1] * &minor_h(&[n1]);
    ensure(h == rhs, || format!("{l}: Laplace expansion"))?;
    for j in 0..n1 {
        let lhs: AlphaPoly = (1..=n1)
            .map(|i| {
                let m = minor(l, &[i]).expect("column is in range");
                f_star(&m, j as i64 - 1).expect("defined")
                    * principal_lower_product(&remove_last_columns(&m, j))
            })
            .sum();
        let rhs = f_star(l, j as i64 - 1).map_err(text)?
            * principal_lower_product(&remove_last_columns(l, j))
            + f_star(l, j as i64).map_err(text)?
                * principal_lower_product(&remove_last_columns(l, j + 1));
        ensure(&a * &lhs == rhs, || format!("{l}: split lemma at j={j}"))?;
    }
    for k in 0..=n1 {
        let ms = minor_sum(l, k);
        let closed = column_removal_sum(l, k)
            .shift_down(k)
            .map_err(text)?
            .scale(&Rational::new(1.into(), factorial(k)));
        ensure(ms == closed, || {
            format!("{l}: finite-difference form at k={k}")
        })?;
        ensure(shifted_jack_onerow(l, n1 - k) == ms, || {
            format!("{l}: transversal sum at k={k}")
        })?;
    }
    let c = falling_coeffs(l);
    ensure(
        c == falling_factorial_expand(&bold_h(l)).map_err(text)?,
        || format!("{l}: falling recurrence"),
    )?;
    let counts = marked_fixed_point_counts(l).map_err(text)?;
    for (k, ck) in c.iter().enumerate() {
        for j in 0..=n1 - k {
            ensure(
                ck.coeff(n1 - k - j) * sign(k) == int(counts[k][k + j]),
                || format!("{l}: marked count at k={k}, j={j}"),
            )?;
        }
    }
    Ok(())
}

fn alpha2(shapes: &[Partition], n: usize) -> Check {
    let two = rat(2);
    for l in shapes {
        let truth = signed_d(l)?.eval(&two);
        ensure(eta2_closed(l) == truth, || {
            format!("{l}: closed form {}, D {truth}", eta2_closed(l))
        })?;
        if let Ok(v) = eta2_doubly_even(l) {
            ensure(v == truth, || {
                format!("{l}: even-column form {v}, D {truth}")
            })?;
        }
        if l.len() <= 2 {
            let k = l.part(2);
            let formula = eta2_two_row(n, k).map_err(text)?;
            let subcube = sign(k) * int(subcube_fixing_formula(n - k, k).map_err(text)?);
            ensure(formula == truth && subcube == truth, || {
                format!("{l}: two-row {formula}, subcube {subcube}")
            })?;
            if n - k <= HYPEROCTAHEDRAL_CAP {
                let counted = sign(k) * int(subcube_fixing_derangements(n - k, k).map_err(text)?);
                ensure(counted == truth, || format!("{l}: enumerated {counted}"))?;
            }
        }
    }
    Ok(())
}
