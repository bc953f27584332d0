//! Verification suites behind `shuffle-spectra verify`.

use anyhow::bail;
use rand::{Rng, SeedableRng};
use spectra_core::blocks::{self, nu_hook_block, nu_two_blocks_block};
use spectra_core::groupalg::{eulerian_idempotents, GroupContext, QElement};
use spectra_core::matrix::RatMatrix;
use spectra_core::operators;
use spectra_core::partition::{binomial, factorial, partitions_of, Partition};
use spectra_core::perm::{self, Permutation};
use spectra_core::seminormal::SeminormalRep;
use spectra_core::{faces, rankone, words};

pub struct Check {
    pub name: String,
    pub pass: bool,
    pub finding: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        pass,
        finding: false,
        detail: detail.into(),
    }
}

/// A reported observation that does not gate the exit code.
fn finding(name: impl Into<String>, matches: bool, detail: impl Into<String>) -> Check {
    Check {
        name: name.into(),
        pass: true,
        finding: !matches,
        detail: detail.into(),
    }
}

pub fn run(suite: &str, n: Option<usize>, json: bool) -> anyhow::Result<i32> {
    let suites: Vec<&str> = if suite == "all" {
        vec![
            "derangements",
            "gr-identity",
            "eulerian",
            "factorizations",
            "commutativity",
            "filtration",
            "tableaux",
            "gelfand-model",
            "brown",
            "conjecture-1.6",
            "conjecture-6.28",
            "gelfand-pair",
        ]
    } else {
        vec![suite]
    };
    let mut all_checks: Vec<(String, Vec<Check>)> = Vec::new();
    for s in suites {
        let checks = run_suite(s, n)?;
        all_checks.push((s.to_string(), checks));
    }
    let pass = all_checks.iter().all(|(_, cs)| cs.iter().all(|c| c.pass));
    if json {
        let payload = serde_json::json!({
            "schema": 1,
            "pass": pass,
            "suites": all_checks.iter().map(|(name, cs)| serde_json::json!({
                "suite": name,
                "pass": cs.iter().all(|c| c.pass),
                "checks": cs.iter().map(|c| serde_json::json!({
                    "name": c.name,
                    "pass": c.pass,
                    "finding": c.finding,
                    "detail": c.detail,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&payload)?);
    } else {
        for (name, cs) in &all_checks {
            for c in cs {
                let status = if !c.pass {
                    "FAIL"
                } else if c.finding {
                    "FINDING"
                } else {
                    "PASS"
                };
                if c.detail.is_empty() {
                    println!("{status} {name}: {}", c.name);
                } else {
                    println!("{status} {name}: {} ({})", c.name, c.detail);
                }
            }
        }
    }
    Ok(if pass { 0 } else { 1 })
}

fn run_suite(suite: &str, n: Option<usize>) -> anyhow::Result<Vec<Check>> {
    match suite {
        "derangements" => Ok(derangements(n.unwrap_or(12))),
        "gr-identity" => Ok(gr_identity(n.unwrap_or(5))),
        "eulerian" => Ok(eulerian(n.unwrap_or(5))),
        "factorizations" => Ok(factorizations(n.unwrap_or(5))?),
        "commutativity" => Ok(commutativity(n.unwrap_or(5))?),
        "filtration" => Ok(filtration(n.unwrap_or(5))?),
        "tableaux" => Ok(tableaux_suite(n.unwrap_or(5))?),
        "gelfand-model" => Ok(gelfand_model(n.unwrap_or(5))?),
        "brown" => Ok(brown(n.unwrap_or(4))?),
        "conjecture-1.6" => Ok(conjecture_families(n.unwrap_or(5))?),
        "conjecture-6.28" => Ok(conjecture_formulas(n.unwrap_or(5))?),
        "gelfand-pair" => Ok(gelfand_pair(n.unwrap_or(5))),
        other => bail!(spectra_core::Error::UnknownSuite(other.to_string())),
    }
}

fn derangements(nmax: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let d = |m: usize| perm::derangement_counts(m);
    let mut ok = true;
    for m in 2..=nmax {
        let (dm, dp, dn) = d(m);
        let (d1, p1, n1) = d(m - 1);
        let (d2, p2, n2) = d(m - 2);
        ok &= dm == (m as u64 - 1) * (d1 + d2);
        ok &= dp == (m as u64 - 1) * (n1 + n2);
        ok &= dn == (m as u64 - 1) * (p1 + p2);
        let expected = (m as i64) * d1 as i64 + if m % 2 == 0 { 1 } else { -1 };
        ok &= dm as i64 == expected;
        let sign_diff = dp as i64 - dn as i64;
        let expected_diff = if m % 2 == 0 { -(m as i64 - 1) } else { m as i64 - 1 };
        ok &= sign_diff == expected_diff;
        // the (vi) correction term carries the sign (-1)^{n-1}
        ok &= dm as i64
            == binomial(m as u64, 2) as i64 * 2 * d2 as i64
                + if m % 2 == 0 { -(m as i64 - 1) } else { m as i64 - 1 };
    }
    checks.push(check(
        format!("recurrences (i)-(vi) for n <= {nmax}"),
        ok,
        "",
    ));
    let mut total_ok = true;
    for m in 0..=nmax {
        let total: u64 = (0..=m)
            .map(|j| binomial(m as u64, j as i64) * d(m - j).0)
            .sum();
        total_ok &= total == factorial(m as u64);
    }
    checks.push(check(
        format!("identity (vii) sums to n! for n <= {nmax}"),
        total_ok,
        "",
    ));
    checks
}

fn gr_identity(nmax: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 1..=nmax {
        let mut ok = true;
        let mut bad = String::new();
        for lam in partitions_of(n) {
            if let Err(monomial) = words::gessel_reutenauer_check(&lam, n, n) {
                ok = false;
                bad = format!("{lam} differs at {monomial:?}");
                break;
            }
        }
        checks.push(check(
            format!("Lyndon content equals descent classes, n = {n}, m = {n}"),
            ok,
            bad,
        ));
    }
    checks
}

fn eulerian(nmax: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 2..=nmax {
        let ctx = GroupContext::new(n);
        let es = eulerian_idempotents(&ctx);
        let mut total = QElement::zero(&ctx);
        for e in &es {
            total = total.add(e).expect("same n");
        }
        let sum_ok = total == QElement::identity(&ctx);
        let mut alt = QElement::zero(&ctx);
        for (j, e) in es.iter().enumerate() {
            let sign = if (j + 1) % 2 == 0 {
                spectra_core::q(1)
            } else {
                spectra_core::q(-1)
            };
            alt = alt.add(&e.scale(&sign)).expect("same n");
        }
        let w0sign = spectra_core::q(if n % 2 == 0 { 1 } else { -1 });
        let w0_ok = alt
            == QElement::single(&ctx, &Permutation::longest_element(n), w0sign);
        let mut orth_ok = true;
        for (i, a) in es.iter().enumerate() {
            for (j, b) in es.iter().enumerate() {
                let prod = a.mul(b, &ctx).expect("same n");
                if i == j {
                    orth_ok &= prod == *a;
                } else {
                    orth_ok &= prod.is_zero();
                }
            }
        }
        checks.push(check(
            format!("Eulerian idempotent identities at n = {n}"),
            sum_ok && w0_ok && orth_ok,
            "",
        ));
    }
    checks
}

fn factorizations(nmax: usize) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 2..=nmax.min(5) {
        let ctx = GroupContext::new(n);
        let mut ok = true;
        for lam in partitions_of(n) {
            let nu = operators::nu_matrix(&ctx, &lam)?;
            let pi = operators::pi_matrix(&ctx, &lam)?;
            ok &= pi.transpose().mul(&pi)? == nu;
            let cs = operators::coset_square_root(&ctx, &lam)?;
            let prod = cs.r_left.mul(&cs.r_right, &ctx)?;
            let nu_el = operators::nu_element(&ctx, &lam)?;
            ok &= prod
                .coeffs
                .iter()
                .zip(&nu_el.coeffs)
                .all(|(&p, &q)| p == q * cs.n_x as i64);
            let b = faces::bhr_matrix(&ctx, &lam)?;
            ok &= b == cs.r_left.right_mult_matrix(&ctx);
            let btb = b.transpose().mul(&b)?;
            ok &= (0..btb.rows()).all(|r| {
                (0..btb.cols()).all(|c| btb[(r, c)] == cs.n_x as i64 * nu[(r, c)])
            });
            ok &= b.to_rat().kernel_basis().cols() == nu.to_rat().kernel_basis().cols();
        }
        checks.push(check(
            format!("pi^T pi, coset square root, face operator at n = {n}"),
            ok,
            "all partitions",
        ));
    }
    if nmax >= 6 {
        // 10 random partitions of 6 for the group-algebra identities
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let ctx = GroupContext::new(6);
        let parts = partitions_of(6);
        let mut ok = true;
        for _ in 0..10 {
            let lam = &parts[rng.gen_range(0..parts.len())];
            let cs = operators::coset_square_root(&ctx, lam)?;
            let prod = cs.r_left.mul(&cs.r_right, &ctx)?;
            let nu_el = operators::nu_element(&ctx, lam)?;
            ok &= prod
                .coeffs
                .iter()
                .zip(&nu_el.coeffs)
                .all(|(&p, &q)| p == q * cs.n_x as i64);
            let pi = operators::pi_matrix(&ctx, lam)?;
            let nu = operators::nu_matrix(&ctx, lam)?;
            ok &= pi.transpose().mul(&pi)? == nu;
        }
        checks.push(check("random factorizations at n = 6", ok, "10 draws"));
    }
    Ok(checks)
}

fn commutativity(n: usize) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    if n <= 6 {
        let ctx = GroupContext::new(n);
        let hooks: Vec<_> = (1..=n)
            .map(|k| operators::nu_element(&ctx, &Partition::hook_column(n, k)))
            .collect::<Result<_, _>>()?;
        let mut ok = true;
        for i in 0..hooks.len() {
            for j in i + 1..hooks.len() {
                ok &= hooks[i].mul(&hooks[j], &ctx)? == hooks[j].mul(&hooks[i], &ctx)?;
            }
        }
        checks.push(check(
            format!("columns family commutes in the group algebra, n = {n}"),
            ok,
            "",
        ));
        let twos: Vec<_> = (0..=n / 2)
            .map(|k| operators::nu_element(&ctx, &Partition::two_blocks(n, k)))
            .collect::<Result<_, _>>()?;
        let mut ok2 = true;
        for i in 0..twos.len() {
            for j in i + 1..twos.len() {
                ok2 &= twos[i].mul(&twos[j], &ctx)? == twos[j].mul(&twos[i], &ctx)?;
            }
        }
        checks.push(check(
            format!("two-blocks family commutes in the group algebra, n = {n}"),
            ok2,
            "",
        ));
    } else {
        let mut ok = true;
        let mut ok2 = true;
        for lam in partitions_of(n) {
            let rep = SeminormalRep::new(&lam);
            let blocks: Vec<RatMatrix> = (1..n)
                .map(|k| nu_hook_block(&rep, k))
                .collect::<Result<_, _>>()?;
            for i in 0..blocks.len() {
                for j in i + 1..blocks.len() {
                    ok &= blocks[i].commutator_is_zero(&blocks[j])?;
                }
            }
            if n <= 7 {
                let twos: Vec<RatMatrix> = (0..=n / 2)
                    .map(|k| nu_two_blocks_block(&rep, k))
                    .collect::<Result<_, _>>()?;
                for i in 0..twos.len() {
                    for j in i + 1..twos.len() {
                        ok2 &= twos[i].commutator_is_zero(&twos[j])?;
                    }
                }
            }
        }
        checks.push(check(
            format!("columns family commutes per irreducible block, n = {n}"),
            ok,
            "",
        ));
        if n <= 7 {
            checks.push(check(
                format!("two-blocks family commutes per irreducible block, n = {n}"),
                ok2,
                "",
            ));
        }
    }
    Ok(checks)
}

fn filtration(n: usize) -> anyhow::Result<Vec<Check>> {
    let report = blocks::kernel_filtration(n)?;
    let mut ok = true;
    for j in 0..=n {
        let (d, dp, dm) = perm::derangement_counts(n - j);
        let c = binomial(n as u64, j as i64);
        ok &= report.factor_dims[j] == (c * d, c * dp, c * dm);
    }
    let (d, _, _) = perm::derangement_counts(n);
    ok &= report.kernel_dims[n - 2] == d;
    let mut checks = vec![check(
        format!("columns filtration dimensions with sign split, n = {n}"),
        ok,
        "",
    )];
    let two = blocks::two_blocks_filtration(n)?;
    let mut ok2 = two.nested;
    for k in 0..=n / 2 {
        let expected: u64 = partitions_of(n)
            .iter()
            .filter(|lam| lam.oddcols() == n - 2 * k)
            .map(|lam| lam.dimension())
            .sum();
        ok2 &= two.layer_dims[k] == expected;
    }
    checks.push(check(
        format!("two-blocks kernel chain nests with Gelfand layer dimensions, n = {n}"),
        ok2,
        "",
    ));
    Ok(checks)
}

fn tableaux_suite(n: usize) -> anyhow::Result<Vec<Check>> {
    use std::collections::BTreeMap;
    let report = blocks::kernel_filtration(n)?;
    let mut ok = true;
    for j in 0..=n {
        let mut predicted: BTreeMap<(Partition, i8), u64> = BTreeMap::new();
        for (shape, sign) in spectra_core::tableaux::predicted_factor(n, j) {
            *predicted.entry((shape, sign)).or_insert(0) += 1;
        }
        ok &= report.factors[j] == predicted;
    }
    Ok(vec![check(
        format!("tableau prediction equals computed factors, n = {n}"),
        ok,
        "",
    )])
}

fn gelfand_model(n: usize) -> anyhow::Result<Vec<Check>> {
    Ok(vec![check(
        format!("Gelfand model content at n = {n}"),
        blocks::gelfand_model_check(n)?,
        "",
    )])
}

fn brown(n: usize) -> anyhow::Result<Vec<Check>> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(271828);
    let ctx = GroupContext::new(n);
    let comps: Vec<Vec<u8>> = faces::enumerate_faces(n)
        .iter()
        .map(|f| f.blocks().iter().map(|b| b.len() as u8).collect())
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut ok = true;
    for _ in 0..20 {
        let mut weights = faces::FaceWeights::new();
        for comp in &comps {
            weights.insert(comp.clone(), spectra_core::q(rng.gen_range(0..7)));
        }
        let report = faces::brown_min_poly(&ctx, &weights)?;
        ok &= report.squarefree && report.roots_within_candidates;
    }
    Ok(vec![check(
        format!("minimal polynomials squarefree with lattice roots, n = {n}, 20 draws"),
        ok,
        "",
    )])
}

fn conjecture_families(n: usize) -> anyhow::Result<Vec<Check>> {
    let ctx = GroupContext::new(n);
    let mut checks = Vec::new();
    for report in operators::commuting_pairs_scan(&ctx)? {
        checks.push(finding(
            format!(
                "nu_{} and nu_{} {}",
                report.lambda,
                report.gamma,
                if report.commute { "commute" } else { "do not commute" }
            ),
            report.commute == report.predicted,
            "two-family rule",
        ));
    }
    let matches_rule = checks.iter().all(|c| !c.finding);
    checks.push(check(
        format!("pair classification matches the two-family rule, n = {n}"),
        matches_rule,
        "",
    ));
    Ok(checks)
}

fn conjecture_formulas(n: usize) -> anyhow::Result<Vec<Check>> {
    let mut checks = Vec::new();
    for cell in blocks::conjecture_formula_scan(n)? {
        checks.push(finding(
            cell.description.clone(),
            cell.matches,
            format!("expected {}, computed {:?}", cell.expected, cell.computed),
        ));
    }
    Ok(checks)
}

fn gelfand_pair(nmax: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    for n in 2..=nmax.min(6) {
        checks.push(check(
            format!("S_{n} with a transposition"),
            rankone::symmetric_group_pair(n).twisted_gelfand_pair(),
            "",
        ));
    }
    for n in 2..=4usize {
        for sign_change in [true, false] {
            let label = if sign_change { "sign change" } else { "transposition" };
            checks.push(check(
                format!("B_{n} with a {label}"),
                rankone::hyperoctahedral_pair(n, sign_change).twisted_gelfand_pair(),
                "",
            ));
        }
    }
    for m in 3..=8usize {
        checks.push(check(
            format!("I2({m})"),
            rankone::dihedral_pair(m).twisted_gelfand_pair(),
            "",
        ));
    }
    let b2 = rankone::b2_all_hyperplanes_charpoly()
        .map(|f| f.to_string())
        .unwrap_or_default();
    checks.push(check(
        "B2 all-hyperplanes counterexample",
        b2 == "(x^2-8x+8)^2 (x-16) (x)^3",
        b2,
    ));
    checks
}
