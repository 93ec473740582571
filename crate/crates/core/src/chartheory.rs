//! Finite-group character arithmetic over cyclotomic scalars.
//!
//! A [`GroupTable`] stores conjugacy classes, power maps (class of g maps to
//! class of g^k), and the irreducible characters. Adams operations act by
//! chi(g) -> chi(g^k) through the power maps, Schur-functor characters are
//! obtained by evaluating the power-sum expansion of s_lambda with
//! p_k -> psi^k(chi), and the trichotomy classifier decides, by exact
//! character arithmetic, which case a psi^2-fixed simple with simple second
//! exterior power falls into.
//!
//! Characteristic 0 only; "simple" at this level means irreducible, tested
//! by <chi, chi> = 1.

use crate::exactnum::{rat, CycLiteral, Cyclotomic, ExactNumError, Rational};
use crate::symfunc::{self, Partition, SymFuncError};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharTheoryError {
    #[error("class function has {got} values, table has {expected} classes")]
    ShapeMismatch { got: usize, expected: usize },
    #[error("not a character: {0}")]
    NotACharacter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invariant violation [{check}]: {detail}")]
    InvariantViolation { check: String, detail: String },
    #[error(transparent)]
    Num(#[from] ExactNumError),
    #[error(transparent)]
    SymFunc(#[from] SymFuncError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub name: String,
    pub size: u64,
}

/// A class function: one cyclotomic value per conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    pub values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    pub fn zero(num_classes: usize) -> Self {
        ClassFunction {
            values: vec![Cyclotomic::zero(); num_classes],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn conj(&self) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    pub fn pointwise_mul(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(|v| v.scale(q)).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroupTable {
    pub name: String,
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassInfo>,
    /// power_maps[k][c] is the class index of g^k for g in class c,
    /// for 0 <= k < exponent.
    pub power_maps: Vec<Vec<usize>>,
    pub irreducibles: Vec<(String, ClassFunction)>,
}

impl GroupTable {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// The identity class is where every 0-th power lands.
    pub fn identity_class(&self) -> usize {
        self.power_maps[0][0]
    }

    fn check_shape(&self, chi: &ClassFunction) -> Result<(), CharTheoryError> {
        if chi.values.len() != self.num_classes() {
            return Err(CharTheoryError::ShapeMismatch {
                got: chi.values.len(),
                expected: self.num_classes(),
            });
        }
        Ok(())
    }
}

/// (1/|G|) sum over classes of size * chi * conj(psi); exact.
pub fn inner_product(
    chi: &ClassFunction,
    psi: &ClassFunction,
    table: &GroupTable,
) -> Result<Cyclotomic, CharTheoryError> {
    table.check_shape(chi)?;
    table.check_shape(psi)?;
    let mut acc = Cyclotomic::zero();
    for (c, info) in table.classes.iter().enumerate() {
        let term = chi.values[c].mul_ref(&psi.values[c].conj());
        acc = acc.add_ref(&term.scale(&rat(info.size as i64)));
    }
    Ok(acc.scale(&Rational::new(1.into(), table.order.into())))
}

/// Adams operation: value at class c is chi at the class of g^k.
pub fn adams(chi: &ClassFunction, k: i64, table: &GroupTable) -> ClassFunction {
    let k = k.rem_euclid(table.exponent as i64) as usize;
    let map = &table.power_maps[k];
    ClassFunction {
        values: (0..table.num_classes())
            .map(|c| chi.values[map[c]].clone())
            .collect(),
    }
}

/// Character of the Schur functor S_lambda applied to chi: evaluate the
/// power-sum expansion of s_lambda with p_k replaced by adams(chi, k).
pub fn schur_character(
    lambda: &Partition,
    chi: &ClassFunction,
    table: &GroupTable,
    bound: u32,
) -> Result<ClassFunction, CharTheoryError> {
    let expansion = symfunc::schur_in_powersums(lambda, bound)?;
    let mut adams_cache: BTreeMap<u32, ClassFunction> = BTreeMap::new();
    let mut out = ClassFunction::zero(table.num_classes());
    for (mu, coeff) in expansion.terms() {
        let mut monomial = ClassFunction {
            values: vec![Cyclotomic::one(); table.num_classes()],
        };
        for &k in mu.parts() {
            let psi_k = adams_cache
                .entry(k)
                .or_insert_with(|| adams(chi, k as i64, table));
            monomial = monomial.pointwise_mul(psi_k);
        }
        out = out.add(&monomial.scale(coeff));
    }
    Ok(out)
}

/// Multiplicities of the irreducibles in chi; errors unless every inner
/// product is a nonnegative rational integer.
pub fn decompose(chi: &ClassFunction, table: &GroupTable) -> Result<Vec<u64>, CharTheoryError> {
    let mut mults = vec![];
    for (name, irr) in &table.irreducibles {
        let ip = inner_product(chi, irr, table)?;
        let q = ip.as_rational().map_err(|_| {
            CharTheoryError::NotACharacter(format!(
                "multiplicity of {name} is the irrational value {ip}"
            ))
        })?;
        if !q.is_integer() || q.is_negative() {
            return Err(CharTheoryError::NotACharacter(format!(
                "multiplicity of {name} is {q}, not a nonnegative integer"
            )));
        }
        mults.push(u64::try_from(q.to_integer()).map_err(|_| {
            CharTheoryError::NotACharacter(format!("multiplicity of {name} out of range"))
        })?);
    }
    Ok(mults)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CaseLabel {
    CaseI,
    CaseIIa,
    CaseIIb,
    CaseIII,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrichotomyReport {
    pub psi2_fixed: bool,
    pub x_simple: bool,
    pub wedge2_simple: bool,
    pub wedge4_zero: bool,
    pub wedge2_in_x_xdual: bool,
    pub x_in_s21: bool,
    pub x_in_wedge3: bool,
    pub case_label: CaseLabel,
}

fn is_one(value: &Cyclotomic) -> bool {
    value == &Cyclotomic::one()
}

fn multiplicity(
    chi: &ClassFunction,
    inside: &ClassFunction,
    table: &GroupTable,
) -> Result<Rational, CharTheoryError> {
    let ip = inner_product(inside, chi, table)?;
    ip.as_rational().map_err(CharTheoryError::from)
}

/// Classify a class function per the case analysis for psi^2-fixed simples
/// with simple second exterior power.
pub fn trichotomy_classify(
    chi: &ClassFunction,
    table: &GroupTable,
    bound: u32,
) -> Result<TrichotomyReport, CharTheoryError> {
    table.check_shape(chi)?;
    let psi2_fixed = adams(chi, 2, table) == *chi;
    let x_simple = is_one(&inner_product(chi, chi, table)?);
    let wedge2 = schur_character(&Partition::column(2), chi, table, bound)?;
    let wedge2_simple = is_one(&inner_product(&wedge2, &wedge2, table)?);
    let wedge4 = schur_character(&Partition::column(4), chi, table, bound)?;
    let wedge4_zero = wedge4.is_zero();
    let x_xdual = chi.pointwise_mul(&chi.conj());
    let wedge2_in_x_xdual = !multiplicity(&wedge2, &x_xdual, table)?.is_zero();
    let s21 = schur_character(&Partition::new(vec![2, 1]), chi, table, bound)?;
    let x_in_s21 = !multiplicity(chi, &s21, table)?.is_zero();
    let wedge3 = schur_character(&Partition::column(3), chi, table, bound)?;
    let x_in_wedge3 = !multiplicity(chi, &wedge3, table)?.is_zero();

    let case_label = if !(psi2_fixed && x_simple && wedge2_simple) {
        CaseLabel::NotApplicable
    } else if wedge4_zero {
        CaseLabel::CaseIII
    } else if !wedge2_in_x_xdual {
        CaseLabel::CaseI
    } else if x_in_wedge3 {
        CaseLabel::CaseIIa
    } else {
        CaseLabel::CaseIIb
    };

    Ok(TrichotomyReport {
        psi2_fixed,
        x_simple,
        wedge2_simple,
        wedge4_zero,
        wedge2_in_x_xdual,
        x_in_s21,
        x_in_wedge3,
        case_label,
    })
}

// ---------------------------------------------------------------------------
// Built-in tables
// ---------------------------------------------------------------------------

/// The non-abelian group of order 21: generators a, b with a^3 = b^7 = 1 and
/// a b a^{-1} = b^2. Classes 1, a, a^2, b, b^3; b and b^2 are conjugate, so
/// the class of b consists of b, b^2, b^4.
pub fn hgroup_table() -> GroupTable {
    let omega = Cyclotomic::root_of_unity(3, 1);
    let omega2 = Cyclotomic::root_of_unity(3, 2);
    let z = Cyclotomic::root_of_unity(7, 1)
        + Cyclotomic::root_of_unity(7, 2)
        + Cyclotomic::root_of_unity(7, 4);
    let zp = Cyclotomic::root_of_unity(7, 3)
        + Cyclotomic::root_of_unity(7, 5)
        + Cyclotomic::root_of_unity(7, 6);
    let one = Cyclotomic::one();
    let three = Cyclotomic::from_integer(3);
    let zero = Cyclotomic::zero();

    // Class of a^j under k-th power: a^{jk}; class of b under k-th power:
    // b^k lies in {b, b^2, b^4} or {b^3, b^5, b^6} according to k mod 7.
    let mut power_maps = vec![];
    let in_b_class = |r: u64| matches!(r, 1 | 2 | 4);
    for k in 0..21u64 {
        let a_pow = |j: u64| -> usize {
            match (j * k) % 3 {
                0 => 0,
                1 => 1,
                _ => 2,
            }
        };
        let b_pow = |j: u64| -> usize {
            let r = (j * k) % 7;
            if r == 0 {
                0
            } else if in_b_class(r) {
                3
            } else {
                4
            }
        };
        power_maps.push(vec![0, a_pow(1), a_pow(2), b_pow(1), b_pow(3)]);
    }

    let cf = |values: Vec<Cyclotomic>| ClassFunction::new(values);
    GroupTable {
        name: "H21".into(),
        order: 21,
        exponent: 21,
        classes: vec![
            ClassInfo { name: "1".into(), size: 1 },
            ClassInfo { name: "a".into(), size: 7 },
            ClassInfo { name: "a2".into(), size: 7 },
            ClassInfo { name: "b".into(), size: 3 },
            ClassInfo { name: "b3".into(), size: 3 },
        ],
        power_maps,
        irreducibles: vec![
            ("chi1".into(), cf(vec![one.clone(), one.clone(), one.clone(), one.clone(), one.clone()])),
            ("chi2".into(), cf(vec![one.clone(), omega.clone(), omega2.clone(), one.clone(), one.clone()])),
            ("chi3".into(), cf(vec![one.clone(), omega2, omega, one.clone(), one.clone()])),
            ("chi4".into(), cf(vec![three.clone(), zero.clone(), zero.clone(), z.clone(), zp.clone()])),
            ("chi5".into(), cf(vec![three, zero.clone(), zero, zp, z])),
        ],
    }
}

/// Cyclic group of order n: n singleton classes, characters zeta_n^{ij}.
pub fn cyclic_table(n: u64) -> GroupTable {
    let classes = (0..n)
        .map(|j| ClassInfo {
            name: format!("g{j}"),
            size: 1,
        })
        .collect();
    let power_maps = (0..n)
        .map(|k| (0..n).map(|j| ((j * k) % n) as usize).collect())
        .collect();
    let irreducibles = (0..n)
        .map(|i| {
            let values = (0..n)
                .map(|j| Cyclotomic::root_of_unity(n, (i * j % n) as i64))
                .collect();
            (format!("chi{}", i + 1), ClassFunction::new(values))
        })
        .collect();
    GroupTable {
        name: format!("C{n}"),
        order: n,
        exponent: n,
        classes,
        power_maps,
        irreducibles,
    }
}

/// Symmetric group S3: classes 1, (12), (123) of sizes 1, 3, 2.
pub fn s3_table() -> GroupTable {
    let cf = |v: [i64; 3]| ClassFunction::new(v.iter().map(|&x| Cyclotomic::from_integer(x)).collect());
    let power_maps = (0..6u64)
        .map(|k| {
            let transposition = if k % 2 == 0 { 0 } else { 1 };
            let three_cycle = if k % 3 == 0 { 0 } else { 2 };
            vec![0, transposition, three_cycle]
        })
        .collect();
    GroupTable {
        name: "S3".into(),
        order: 6,
        exponent: 6,
        classes: vec![
            ClassInfo { name: "1".into(), size: 1 },
            ClassInfo { name: "(12)".into(), size: 3 },
            ClassInfo { name: "(123)".into(), size: 2 },
        ],
        power_maps,
        irreducibles: vec![
            ("trivial".into(), cf([1, 1, 1])),
            ("sign".into(), cf([1, -1, 1])),
            ("standard".into(), cf([2, 0, -1])),
        ],
    }
}

/// All built-in tables: H21, C2..C7, S3.
pub fn builtin_tables() -> Vec<GroupTable> {
    let mut tables = vec![hgroup_table()];
    for n in 2..=7 {
        tables.push(cyclic_table(n));
    }
    tables.push(s3_table());
    tables
}

// ---------------------------------------------------------------------------
// File format
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IrreducibleFile {
    pub name: String,
    pub values: Vec<CycLiteral>,
}

/// On-disk JSON schema for a group table.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupTableFile {
    pub name: String,
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassInfo>,
    pub power_maps: BTreeMap<String, Vec<usize>>,
    pub irreducibles: Vec<IrreducibleFile>,
}

impl GroupTableFile {
    pub fn from_table(table: &GroupTable) -> Self {
        GroupTableFile {
            name: table.name.clone(),
            order: table.order,
            exponent: table.exponent,
            classes: table.classes.clone(),
            power_maps: table
                .power_maps
                .iter()
                .enumerate()
                .map(|(k, m)| (k.to_string(), m.clone()))
                .collect(),
            irreducibles: table
                .irreducibles
                .iter()
                .map(|(name, chi)| IrreducibleFile {
                    name: name.clone(),
                    values: chi
                        .values
                        .iter()
                        .map(|v| match v.as_rational() {
                            Ok(q) => CycLiteral::Rational(crate::exactnum::format_rational(&q)),
                            Err(_) => CycLiteral::Terms(v.to_terms()),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InvariantCheck {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn check(name: &str, ok: bool, detail: String) -> InvariantCheck {
    InvariantCheck {
        name: name.to_string(),
        ok,
        detail,
    }
}

/// Run every table invariant, reporting each one's status.
pub fn check_invariants(table: &GroupTable) -> Vec<InvariantCheck> {
    let mut out = vec![];
    let r = table.num_classes();

    let shape_ok = r > 0
        && table.power_maps.len() == table.exponent as usize
        && table.power_maps.iter().all(|m| m.len() == r && m.iter().all(|&c| c < r))
        && table.irreducibles.iter().all(|(_, chi)| chi.values.len() == r);
    out.push(check("shape", shape_ok, format!("{r} classes, exponent {}", table.exponent)));
    if !shape_ok {
        return out;
    }

    let size_sum: u64 = table.classes.iter().map(|c| c.size).sum();
    out.push(check(
        "size-sum",
        size_sum == table.order,
        format!("class sizes sum to {size_sum}, order is {}", table.order),
    ));

    let id = table.power_maps[0][0];
    let zero_constant = table.power_maps[0].iter().all(|&c| c == id) && table.classes[id].size == 1;
    out.push(check(
        "power-map-zero",
        zero_constant,
        format!("0-th power map sends every class to class {id} of size 1"),
    ));

    let identity_map = table.power_maps.len() > 1
        && table.power_maps[1].iter().enumerate().all(|(c, &t)| c == t);
    out.push(check("power-map-identity", identity_map, "power_maps[1] is the identity".into()));

    let mut comp_ok = true;
    let mut comp_detail = String::from("power_maps[k] o power_maps[m] = power_maps[km mod exponent]");
    'outer: for k in 0..table.exponent as usize {
        for m in 0..table.exponent as usize {
            let km = (k as u64 * m as u64 % table.exponent) as usize;
            for c in 0..r {
                if table.power_maps[k][table.power_maps[m][c]] != table.power_maps[km][c] {
                    comp_ok = false;
                    comp_detail = format!("fails at k={k}, m={m}, class {c}");
                    break 'outer;
                }
            }
        }
    }
    out.push(check("power-map-composition", comp_ok, comp_detail));

    let fixes_id = table.power_maps.iter().all(|m| m[id] == id);
    out.push(check("power-map-fixes-identity", fixes_id, "every power of the identity is the identity".into()));

    let mut orth_ok = true;
    let mut orth_detail = String::from("irreducibles are orthonormal");
    'orth: for (i, (ni, ci)) in table.irreducibles.iter().enumerate() {
        for (j, (nj, cj)) in table.irreducibles.iter().enumerate() {
            let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
            match inner_product(ci, cj, table) {
                Ok(ip) if ip == expected => {}
                Ok(ip) => {
                    orth_ok = false;
                    orth_detail = format!("<{ni}, {nj}> = {ip}");
                    break 'orth;
                }
                Err(e) => {
                    orth_ok = false;
                    orth_detail = format!("<{ni}, {nj}>: {e}");
                    break 'orth;
                }
            }
        }
    }
    out.push(check("orthonormality", orth_ok, orth_detail));

    let mut dim_ok = true;
    let mut sum_sq = Rational::zero();
    let mut dim_detail = String::new();
    for (name, chi) in &table.irreducibles {
        match chi.values[id].as_rational() {
            Ok(d) if d.is_integer() && d.is_positive() => {
                sum_sq += &d * &d;
            }
            other => {
                dim_ok = false;
                dim_detail = format!("dimension of {name} is not a positive integer ({other:?})");
            }
        }
    }
    if dim_ok {
        dim_ok = sum_sq == rat(table.order as i64);
        dim_detail = format!("squared dimensions sum to {sum_sq}, order is {}", table.order);
    }
    out.push(check("dimension-sum", dim_ok, dim_detail));

    out
}

/// Parse and fully validate a group table from its JSON file contents.
pub fn parse_group_table(json: &str) -> Result<GroupTable, CharTheoryError> {
    let file: GroupTableFile =
        serde_json::from_str(json).map_err(|e| CharTheoryError::Parse(e.to_string()))?;
    let table = build_table(&file)?;
    for c in check_invariants(&table) {
        if !c.ok {
            return Err(CharTheoryError::InvariantViolation {
                check: c.name,
                detail: c.detail,
            });
        }
    }
    Ok(table)
}

/// Build a table from the file schema without running invariant checks.
pub fn build_table(file: &GroupTableFile) -> Result<GroupTable, CharTheoryError> {
    let mut power_maps = vec![];
    for k in 0..file.exponent {
        let map = file.power_maps.get(&k.to_string()).ok_or_else(|| {
            CharTheoryError::Parse(format!("power_maps is missing key \"{k}\""))
        })?;
        power_maps.push(map.clone());
    }
    let mut irreducibles = vec![];
    for irr in &file.irreducibles {
        let values = irr
            .values
            .iter()
            .map(|lit| lit.to_cyclotomic())
            .collect::<Result<Vec<_>, _>>()?;
        irreducibles.push((irr.name.clone(), ClassFunction::new(values)));
    }
    Ok(GroupTable {
        name: file.name.clone(),
        order: file.order,
        exponent: file.exponent,
        classes: file.classes.clone(),
        power_maps,
        irreducibles,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h() -> GroupTable {
        hgroup_table()
    }

    fn chi(table: &GroupTable, i: usize) -> ClassFunction {
        table.irreducibles[i].1.clone()
    }

    #[test]
    fn builtin_tables_satisfy_invariants() {
        for table in builtin_tables() {
            for c in check_invariants(&table) {
                assert!(c.ok, "{}: {} failed: {}", table.name, c.name, c.detail);
            }
        }
    }

    #[test]
    fn hgroup_power_map_k2() {
        assert_eq!(h().power_maps[2], vec![0, 2, 1, 3, 4]);
    }

    #[test]
    fn hgroup_chi4_values() {
        let t = h();
        let z = Cyclotomic::root_of_unity(7, 1)
            + Cyclotomic::root_of_unity(7, 2)
            + Cyclotomic::root_of_unity(7, 4);
        assert_eq!(chi(&t, 3).values[0], Cyclotomic::from_integer(3));
        assert_eq!(chi(&t, 3).values[3], z);
    }

    #[test]
    fn inner_products_over_h() {
        let t = h();
        let one = Cyclotomic::one();
        let zero = Cyclotomic::zero();
        assert_eq!(inner_product(&chi(&t, 0), &chi(&t, 0), &t).unwrap(), one);
        assert_eq!(inner_product(&chi(&t, 3), &chi(&t, 3), &t).unwrap(), one);
        assert_eq!(inner_product(&chi(&t, 3), &chi(&t, 4), &t).unwrap(), zero);
    }

    #[test]
    fn adams_on_chi4() {
        let t = h();
        let v = chi(&t, 3);
        assert_eq!(adams(&v, 2, &t), v);
        let psi3 = adams(&v, 3, &t);
        assert_ne!(psi3, v);
        // a^3 = 1, so the value at class a is chi4(1) = 3
        assert_eq!(psi3.values[1], Cyclotomic::from_integer(3));
        assert_eq!(adams(&v, 1, &t), v);
    }

    #[test]
    fn schur_characters_of_v() {
        let t = h();
        let v = chi(&t, 3);
        assert_eq!(
            schur_character(&Partition::new(vec![1]), &v, &t, 6).unwrap(),
            v
        );
        // wedge^3 V is trivial
        assert_eq!(
            schur_character(&Partition::column(3), &v, &t, 6).unwrap(),
            chi(&t, 0)
        );
        // wedge^2 V = V*
        assert_eq!(
            schur_character(&Partition::column(2), &v, &t, 6).unwrap(),
            chi(&t, 4)
        );
    }

    #[test]
    fn decompose_v_tensor_vdual() {
        let t = h();
        let v = chi(&t, 3);
        let prod = v.pointwise_mul(&v.conj());
        assert_eq!(decompose(&prod, &t).unwrap(), vec![1, 1, 1, 1, 1]);
        assert_eq!(decompose(&chi(&t, 0), &t).unwrap(), vec![1, 0, 0, 0, 0]);
    }

    #[test]
    fn decompose_s21_of_v() {
        // S_(2,1)(V) = V tensor wedge^2 V minus wedge^3 V = (1,1,1,1,1) - chi1
        let t = h();
        let v = chi(&t, 3);
        let s21 = schur_character(&Partition::new(vec![2, 1]), &v, &t, 6).unwrap();
        assert_eq!(decompose(&s21, &t).unwrap(), vec![0, 1, 1, 1, 1]);
    }

    #[test]
    fn decompose_rejects_non_characters() {
        let t = h();
        let not_char = chi(&t, 3).scale(&crate::exactnum::ratio(1, 2));
        assert!(matches!(
            decompose(&not_char, &t),
            Err(CharTheoryError::NotACharacter(_))
        ));
    }

    #[test]
    fn trichotomy_of_v_is_case_iii() {
        let t = h();
        let report = trichotomy_classify(&chi(&t, 3), &t, 6).unwrap();
        assert!(report.psi2_fixed && report.x_simple && report.wedge2_simple);
        assert!(report.wedge4_zero);
        assert!(report.x_in_s21);
        assert_eq!(report.case_label, CaseLabel::CaseIII);
    }

    #[test]
    fn trichotomy_of_trivial_is_not_applicable() {
        let t = h();
        let report = trichotomy_classify(&chi(&t, 0), &t, 6).unwrap();
        assert!(!report.wedge2_simple);
        assert_eq!(report.case_label, CaseLabel::NotApplicable);
    }

    #[test]
    fn trichotomy_of_s3_standard_is_not_applicable() {
        let t = s3_table();
        let report = trichotomy_classify(&chi(&t, 2), &t, 6).unwrap();
        assert!(!report.psi2_fixed);
        assert_eq!(report.case_label, CaseLabel::NotApplicable);
    }

    #[test]
    fn self_dual_psi2_fixed_simples_are_trivial() {
        for t in builtin_tables() {
            let id = t.identity_class();
            for (name, irr) in &t.irreducibles {
                let self_dual = irr.conj() == *irr;
                let fixed = adams(irr, 2, &t) == *irr;
                if self_dual && fixed {
                    assert!(
                        irr.values.iter().all(|v| *v == Cyclotomic::one()),
                        "{}: {} is a nontrivial self-dual psi^2-fixed irreducible",
                        t.name,
                        name
                    );
                    assert_eq!(irr.values[id], Cyclotomic::one());
                }
            }
        }
    }

    #[test]
    fn cyclic_c3_values() {
        let t = cyclic_table(3);
        assert_eq!(t.irreducibles.len(), 3);
        assert_eq!(
            t.irreducibles[1].1.values[1],
            Cyclotomic::root_of_unity(3, 1)
        );
    }

    #[test]
    fn parse_rejects_bad_size_sum() {
        let mut file = GroupTableFile::from_table(&h());
        file.classes[1].size = 6; // sum becomes 20 under order 21
        let json = serde_json::to_string(&file).unwrap();
        match parse_group_table(&json) {
            Err(CharTheoryError::InvariantViolation { check, .. }) => {
                assert_eq!(check, "size-sum")
            }
            other => panic!("expected size-sum violation, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_bad_power_map_composition() {
        let mut file = GroupTableFile::from_table(&h());
        // replacing pm[2] with the identity breaks pm[2] o pm[4] = pm[8]
        file.power_maps.insert("2".into(), vec![0, 1, 2, 3, 4]);
        let json = serde_json::to_string(&file).unwrap();
        match parse_group_table(&json) {
            Err(CharTheoryError::InvariantViolation { check, .. }) => {
                assert_eq!(check, "power-map-composition")
            }
            other => panic!("expected composition violation, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_truncated_file() {
        assert!(matches!(
            parse_group_table("{\"name\": \"broken\""),
            Err(CharTheoryError::Parse(_))
        ));
    }

    #[test]
    fn shipped_hgroup_file_round_trips() {
        let json = include_str!("../data/hgroup.json");
        let parsed = parse_group_table(json).unwrap();
        let builtin = h();
        assert_eq!(parsed.order, builtin.order);
        assert_eq!(parsed.power_maps, builtin.power_maps);
        assert_eq!(parsed.classes, builtin.classes);
        for (p, b) in parsed.irreducibles.iter().zip(&builtin.irreducibles) {
            assert_eq!(p.0, b.0);
            assert_eq!(p.1, b.1);
        }
    }
}
