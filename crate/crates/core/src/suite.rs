//! Expectation tables and the checks `modcohom verify` runs.
//!
//! Every table is a function of `p`. Factors are written by their untwisted
//! highest weight; `(1,0)` stands for `L(1,0)^(1)` and `(0,0)` for `k`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::cohom::{
    are_dual, block_dims, cohomology, complex_for, decompose_character, euler_check, gl3_from_sl3,
    CharacterTable, CohomError, CohomologyReport, DegreeReport,
};
use crate::liealg::{weyl_dimension, AlgebraKind, Weight};
use crate::report::factor_name;
use crate::repr::{singular_vectors, Character, ModuleFamily, ModuleLabel};
use crate::Factor;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteName {
    Theorem1,
    Corollary1,
    Corollary2,
    Corollary3,
    LemmaBlocks,
    Properties,
}

impl SuiteName {
    pub const ALL: [SuiteName; 6] = [
        SuiteName::Theorem1,
        SuiteName::Corollary1,
        SuiteName::Corollary2,
        SuiteName::Corollary3,
        SuiteName::LemmaBlocks,
        SuiteName::Properties,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SuiteName::Theorem1 => "theorem1",
            SuiteName::Corollary1 => "corollary1",
            SuiteName::Corollary2 => "corollary2",
            SuiteName::Corollary3 => "corollary3",
            SuiteName::LemmaBlocks => "lemma-blocks",
            SuiteName::Properties => "properties",
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SuiteName::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = SuiteName::ALL.iter().map(|n| n.name()).collect();
                format!("unknown suite `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// One compared expectation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub id: String,
    pub expected: String,
    pub actual: String,
}

impl Row {
    fn new(id: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        Row {
            id: id.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub suite: SuiteName,
    pub p: u32,
    pub rows: Vec<Row>,
    /// Informational lines that are not compared.
    pub notes: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.passed()).count()
    }

    pub fn failed(&self) -> usize {
        self.rows.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(|r| !r.passed())
    }

    /// `PASS`/`FAIL` per row, a diff under each failure, notes, then counts.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            if r.passed() {
                out += &format!("PASS  {}: {}\n", r.id, r.actual);
            } else {
                out += &format!(
                    "FAIL  {}\n      - expected: {}\n      + actual:   {}\n",
                    r.id, r.expected, r.actual
                );
            }
        }
        for n in &self.notes {
            out += &format!("NOTE  {n}\n");
        }
        out += &format!(
            "{} p={}: {} passed, {} failed\n",
            self.suite,
            self.p,
            self.passed(),
            self.failed()
        );
        out
    }
}

/// Factors per degree; degrees not listed are zero.
pub type Table = BTreeMap<usize, Vec<(Weight, usize)>>;

fn w(a: i64, b: i64) -> Weight {
    Weight::new(a, b)
}

fn table(entries: &[(&[usize], &[(Weight, usize)])]) -> Table {
    let mut t = Table::new();
    for (degrees, factors) in entries {
        for &n in *degrees {
            t.insert(n, factors.to_vec());
        }
    }
    t
}

fn label(family: ModuleFamily, r: u32, s: u32) -> ModuleLabel {
    ModuleLabel::new(family, r, s)
}

/// The six restricted weights `(0,0), (p-2,1), (1,p-2), (p-3,0), (0,p-3),
/// (p-2,p-2)` in that order.
pub fn peculiar_weights(p: u32) -> [(u32, u32); 6] {
    [
        (0, 0),
        (p - 2, 1),
        (1, p - 2),
        (p - 3, 0),
        (0, p - 3),
        (p - 2, p - 2),
    ]
}

const ITEMS: [&str; 6] = ["a", "b", "c", "d", "e", "f"];

/// Simple modules over `sl3`.
pub fn theorem1(p: u32) -> Vec<(ModuleLabel, Table)> {
    let [a, b, c, d, e, f] = peculiar_weights(p);
    let (l10, l01, l11, k) = (w(1, 0), w(0, 1), w(1, 1), w(0, 0));
    vec![
        (label(ModuleFamily::Simple, a.0, a.1), table(&[(&[0, 3, 5, 8], &[(k, 1)])])),
        (
            label(ModuleFamily::Simple, b.0, b.1),
            table(&[(&[1, 7], &[(l10, 1)]), (&[4], &[(l10, 2)])]),
        ),
        (
            label(ModuleFamily::Simple, c.0, c.1),
            table(&[(&[1, 7], &[(l01, 1)]), (&[4], &[(l01, 2)])]),
        ),
        (label(ModuleFamily::Simple, d.0, d.1), table(&[(&[2, 3, 5, 6], &[(l10, 1)])])),
        (label(ModuleFamily::Simple, e.0, e.1), table(&[(&[2, 3, 5, 6], &[(l01, 1)])])),
        (
            label(ModuleFamily::Simple, f.0, f.1),
            table(&[
                (&[1, 7], &[(k, 1)]),
                (&[3, 5], &[(l11, 1)]),
                (&[4], &[(l11, 2), (k, 2)]),
            ]),
        ),
    ]
}

/// Simple modules over `gl3` with the centre acting by zero.
pub fn corollary1(p: u32) -> Vec<(ModuleLabel, Table)> {
    let [a, b, c, d, e, f] = peculiar_weights(p);
    let (l10, l01, l11, k) = (w(1, 0), w(0, 1), w(1, 1), w(0, 0));
    vec![
        (
            label(ModuleFamily::Simple, a.0, a.1),
            table(&[(&[0, 1, 3, 4, 5, 6, 8, 9], &[(k, 1)])]),
        ),
        (
            label(ModuleFamily::Simple, b.0, b.1),
            table(&[(&[1, 2, 7, 8], &[(l10, 1)]), (&[4, 5], &[(l10, 2)])]),
        ),
        (
            label(ModuleFamily::Simple, c.0, c.1),
            table(&[(&[1, 2, 7, 8], &[(l01, 1)]), (&[4, 5], &[(l01, 2)])]),
        ),
        (
            label(ModuleFamily::Simple, d.0, d.1),
            table(&[(&[2, 4, 5, 7], &[(l10, 1)]), (&[3, 6], &[(l10, 2)])]),
        ),
        (
            label(ModuleFamily::Simple, e.0, e.1),
            table(&[(&[2, 4, 5, 7], &[(l01, 1)]), (&[3, 6], &[(l01, 2)])]),
        ),
        (
            label(ModuleFamily::Simple, f.0, f.1),
            table(&[
                (&[1, 2, 7, 8], &[(k, 1)]),
                (&[3, 6], &[(l11, 1)]),
                (&[4, 5], &[(l11, 3), (k, 2)]),
            ]),
        ),
    ]
}

/// Induced modules `H^0(λ)` over `sl3`.
pub fn corollary2(p: u32) -> Vec<(ModuleLabel, Table)> {
    let [a, b, c, d, e, f] = peculiar_weights(p);
    let (l10, l01, l11, k) = (w(1, 0), w(0, 1), w(1, 1), w(0, 0));
    vec![
        (label(ModuleFamily::Induced, a.0, a.1), table(&[(&[0, 3, 5, 8], &[(k, 1)])])),
        (
            label(ModuleFamily::Induced, b.0, b.1),
            table(&[(&[1, 2, 3, 5, 6, 7], &[(l10, 1)]), (&[4], &[(l10, 2)])]),
        ),
        (
            label(ModuleFamily::Induced, c.0, c.1),
            table(&[(&[1, 2, 3, 5, 6, 7], &[(l01, 1)]), (&[4], &[(l01, 2)])]),
        ),
        (label(ModuleFamily::Induced, d.0, d.1), table(&[(&[2, 3, 5, 6], &[(l10, 1)])])),
        (label(ModuleFamily::Induced, e.0, e.1), table(&[(&[2, 3, 5, 6], &[(l01, 1)])])),
        (
            label(ModuleFamily::Induced, f.0, f.1),
            table(&[
                (&[3], &[(l11, 1)]),
                (&[4], &[(l11, 2), (k, 1)]),
                (&[5], &[(l11, 1), (k, 1)]),
                (&[7, 8], &[(k, 1)]),
            ]),
        ),
    ]
}

/// Weyl modules `V(λ)` over `sl3`.
pub fn corollary3(p: u32) -> Vec<(ModuleLabel, Table)> {
    let [a, b, c, d, e, f] = peculiar_weights(p);
    let (l10, l01, l11, k) = (w(1, 0), w(0, 1), w(1, 1), w(0, 0));
    vec![
        (label(ModuleFamily::Weyl, a.0, a.1), table(&[(&[0, 3, 5, 8], &[(k, 1)])])),
        (
            label(ModuleFamily::Weyl, b.0, b.1),
            table(&[(&[1, 2, 3, 5, 6, 7], &[(l10, 1)]), (&[4], &[(l10, 2)])]),
        ),
        (
            label(ModuleFamily::Weyl, c.0, c.1),
            table(&[(&[1, 2, 3, 5, 6, 7], &[(l01, 1)]), (&[4], &[(l01, 2)])]),
        ),
        (label(ModuleFamily::Weyl, d.0, d.1), table(&[(&[2, 3, 5, 6], &[(l10, 1)])])),
        (label(ModuleFamily::Weyl, e.0, e.1), table(&[(&[2, 3, 5, 6], &[(l01, 1)])])),
        (
            label(ModuleFamily::Weyl, f.0, f.1),
            table(&[
                (&[0, 1], &[(k, 1)]),
                (&[3], &[(l11, 1), (k, 1)]),
                (&[4], &[(l11, 2), (k, 1)]),
                (&[5], &[(l11, 1)]),
            ]),
        ),
    ]
}

/// `H^0..H^4` of `H^0(p-2,p-2)`.
pub fn induced_low_degrees(p: u32) -> (ModuleLabel, Table) {
    let (l11, k) = (w(1, 1), w(0, 0));
    (
        label(ModuleFamily::Induced, p - 2, p - 2),
        table(&[(&[3], &[(l11, 1)]), (&[4], &[(l11, 2), (k, 1)])]),
    )
}

/// `(degree, cochains, cocycles, cohomology)` on one weight block.
pub type BlockRow = (usize, usize, usize, usize);

/// Block dimensions at weight `pω1` for `L(p-2,1)` in degrees 2..=7 and
/// `L(p-3,0)` in 2..=6.
pub fn lemma_blocks(p: u32) -> Vec<(ModuleLabel, Vec<BlockRow>)> {
    vec![
        (
            label(ModuleFamily::Simple, p - 2, 1),
            vec![
                (2, 7, 1, 0),
                (3, 14, 6, 0),
                (4, 18, 10, 2),
                (5, 14, 8, 0),
                (6, 7, 6, 0),
                (7, 2, 2, 1),
            ],
        ),
        (
            label(ModuleFamily::Simple, p - 3, 0),
            vec![(2, 1, 1, 1), (3, 2, 1, 1), (4, 2, 1, 0), (5, 2, 2, 1), (6, 1, 1, 1)],
        ),
    ]
}

fn describe(dim: usize, factors: &BTreeMap<Weight, usize>, residual: &BTreeMap<Weight, usize>) -> String {
    let mut parts: Vec<String> = factors
        .iter()
        .rev()
        .map(|(&weight, &mult)| factor_name(&Factor { weight, twist: 1, mult }))
        .collect();
    if !residual.is_empty() {
        let res: Vec<String> = residual.iter().map(|(w, m)| format!("{w}:{m}")).collect();
        parts.push(format!("residual[{}]", res.join(" ")));
    }
    if parts.is_empty() {
        format!("dim {dim}")
    } else {
        format!("dim {dim}: {}", parts.join(" + "))
    }
}

fn describe_expected(factors: &[(Weight, usize)]) -> String {
    let dim = factors
        .iter()
        .map(|(w, m)| m * weyl_dimension(w.a as u32, w.b as u32))
        .sum();
    let map = factors.iter().copied().collect();
    describe(dim, &map, &BTreeMap::new())
}

fn describe_actual(d: Option<&DegreeReport>) -> String {
    match d {
        None => describe(0, &BTreeMap::new(), &BTreeMap::new()),
        Some(d) => {
            let map = d.factors.iter().map(|f| (f.weight, f.mult)).collect();
            describe(d.dim, &map, &d.residual)
        }
    }
}

/// One row per degree in `degrees`, comparing `report` with `expected`.
pub fn table_rows(
    prefix: &str,
    report: &CohomologyReport,
    expected: &Table,
    degrees: impl IntoIterator<Item = usize>,
) -> Vec<Row> {
    degrees
        .into_iter()
        .map(|n| {
            let exp = expected.get(&n).map(|f| f.as_slice()).unwrap_or(&[]);
            Row::new(
                format!("{prefix} H^{n}"),
                describe_expected(exp),
                describe_actual(report.degrees.get(n)),
            )
        })
        .collect()
}

/// Where reports come from; the CLI plugs its cache in here.
pub type Source<'a> =
    dyn Fn(AlgebraKind, &ModuleLabel) -> Result<CohomologyReport, CohomError> + Sync + 'a;

/// Runs `suite` at `p`, fetching reports from `source`.
pub fn run(suite: SuiteName, p: u32, source: &Source) -> Result<SuiteOutcome, CohomError> {
    let mut outcome = SuiteOutcome {
        suite,
        p,
        rows: Vec::new(),
        notes: Vec::new(),
    };
    let rows = &mut outcome.rows;
    match suite {
        SuiteName::Theorem1 => {
            for (item, (m, t)) in ITEMS.iter().zip(theorem1(p)) {
                let r = source(AlgebraKind::Sl3, &m)?;
                rows.extend(table_rows(&format!("({item}) {m}"), &r, &t, 0..=8));
            }
            let found = peculiar_scan(p, ModuleFamily::Simple, source)?;
            let mut expected: Vec<(u32, u32)> = peculiar_weights(p).to_vec();
            expected.sort_unstable();
            rows.push(Row::new(
                "simple modules with nonzero cohomology",
                format!("{expected:?}"),
                format!("{found:?}"),
            ));
        }
        SuiteName::Corollary1 => {
            for (item, (m, t)) in ITEMS.iter().zip(corollary1(p)) {
                let split = gl3_from_sl3(&source(AlgebraKind::Sl3, &m)?);
                let direct = source(AlgebraKind::Gl3, &m)?;
                rows.extend(table_rows(&format!("({item}) {m} split"), &split, &t, 0..=9));
                rows.extend(table_rows(&format!("({item}) {m} direct"), &direct, &t, 0..=9));
            }
        }
        SuiteName::Corollary2 | SuiteName::Corollary3 => {
            let tables = if suite == SuiteName::Corollary2 {
                corollary2(p)
            } else {
                corollary3(p)
            };
            for (item, (m, t)) in ITEMS.iter().zip(tables) {
                let r = source(AlgebraKind::Sl3, &m)?;
                rows.extend(table_rows(&format!("({item}) {m}"), &r, &t, 0..=8));
                let partner = dual_partner(&m);
                let other = source(AlgebraKind::Sl3, &partner)?;
                rows.push(Row::new(
                    format!("({item}) {m} mirrors {partner}"),
                    true,
                    are_dual(&r, &other),
                ));
            }
        }
        SuiteName::LemmaBlocks => {
            let target = Weight::new(p as i64, 0);
            for (m, expected) in lemma_blocks(p) {
                let complex = complex_for(AlgebraKind::Sl3, &m.build(p)?)?.restrict_to_pxt(p);
                let b = block_dims(&complex, target)?;
                for (n, c, z, h) in expected {
                    rows.push(Row::new(
                        format!("{m} block {target} degree {n} (C, Z, H)"),
                        format!("({c}, {z}, {h})"),
                        format!("({}, {}, {})", b.cochains[n], b.cocycles[n], b.cohomology[n]),
                    ));
                }
                if m.family == ModuleFamily::Simple && m.weight.b == 1 {
                    for n in [3, 4] {
                        rows.push(Row::new(
                            format!("{m} block {target} cocycle system rank in degree {n}"),
                            8,
                            b.cochains[n] - b.cocycles[n],
                        ));
                    }
                }
            }
            let (m, t) = induced_low_degrees(p);
            let r = source(AlgebraKind::Sl3, &m)?;
            rows.extend(table_rows(&format!("{m} low degrees"), &r, &t, 0..=4));
        }
        SuiteName::Properties => {
            let (prop_rows, notes) = properties(p)?;
            rows.extend(prop_rows);
            outcome.notes = notes;
        }
    }
    Ok(outcome)
}

/// `H^0(r,s)^* = V(s,r)` and `L(r,s)^* = L(s,r)`.
pub fn dual_partner(m: &ModuleLabel) -> ModuleLabel {
    let family = match m.family {
        ModuleFamily::Induced => ModuleFamily::Weyl,
        ModuleFamily::Weyl => ModuleFamily::Induced,
        other => other,
    };
    ModuleLabel {
        family,
        weight: Weight::new(m.weight.b, m.weight.a),
    }
}

/// Restricted `(r, s)` whose module in `family` has nonzero `sl3` cohomology.
pub fn peculiar_scan(p: u32, family: ModuleFamily, source: &Source) -> Result<Vec<(u32, u32)>, CohomError> {
    let all: Vec<(u32, u32)> = (0..p).flat_map(|r| (0..p).map(move |s| (r, s))).collect();
    let results = all
        .par_iter()
        .map(|&(r, s)| {
            source(AlgebraKind::Sl3, &label(family, r, s)).map(|rep| (!rep.is_zero()).then_some((r, s)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(results.into_iter().flatten().collect())
}

/// The modules the property suite runs over: simple, Weyl and induced at the
/// six peculiar weights.
pub fn property_modules(p: u32) -> Vec<ModuleLabel> {
    [ModuleFamily::Simple, ModuleFamily::Weyl, ModuleFamily::Induced]
        .into_iter()
        .flat_map(|fam| peculiar_weights(p).map(|(r, s)| label(fam, r, s)))
        .collect()
}

fn ok_or(violations: Vec<String>) -> String {
    if violations.is_empty() {
        "ok".into()
    } else {
        violations.join("; ")
    }
}

fn module_properties(p: u32, m: &ModuleLabel) -> Result<Vec<Row>, CohomError> {
    let rep = m.build(p)?;
    let mut rows = Vec::new();
    let violations: Vec<String> = rep.check().iter().map(|v| v.to_string()).collect();
    rows.push(Row::new(format!("{m} representation axioms"), "ok", ok_or(violations)));
    rows.push(Row::new(
        format!("{m} character is Weyl-symmetric"),
        true,
        rep.character().is_weyl_symmetric(),
    ));
    if m.family == ModuleFamily::Simple {
        let extra: Vec<String> = singular_vectors(&rep)
            .iter()
            .map(|(w, sub)| format!("{} at {w}", sub.dim()))
            .collect();
        rows.push(Row::new(
            format!("{m} has no singular vectors below the highest weight"),
            "ok",
            ok_or(extra),
        ));
    }

    let full = complex_for(AlgebraKind::Sl3, &rep)?;
    let complex_ok = match full.check() {
        Ok(()) => "ok".to_string(),
        Err(e) => e.to_string(),
    };
    rows.push(Row::new(format!("{m} d^2 = 0 and d preserves weights"), "ok", complex_ok));
    // `cohomology` fails with InternalInconsistency unless both dimension
    // routes agree on every block.
    let h_full = cohomology(&full)?;
    let h_res = cohomology(&full.restrict_to_pxt(p))?;
    rows.push(Row::new(
        format!("{m} full and pX(T)-restricted complexes"),
        format!("{:?}", h_full.dims()),
        format!("{:?}", h_res.dims()),
    ));
    rows.push(Row::new(format!("{m} Euler sums vanish"), true, euler_check(&h_full)));
    let h_dual = cohomology(&complex_for(AlgebraKind::Sl3, &rep.dual())?.restrict_to_pxt(p))?;
    rows.push(Row::new(format!("{m} duality with M*"), true, are_dual(&h_res, &h_dual)));
    let off_lattice: Vec<String> = h_full
        .support()
        .into_iter()
        .filter(|w| w.untwist(p).is_none())
        .map(|w| w.to_string())
        .collect();
    rows.push(Row::new(format!("{m} cohomology weights lie in pX(T)"), "ok", ok_or(off_lattice)));
    Ok(rows)
}

fn tensor_rows(p: u32) -> Result<(Row, String), CohomError> {
    let adjoint = label(ModuleFamily::Simple, 1, 1).build(p)?.character();
    let product = adjoint.tensor(&adjoint);
    let show = |table: &CharacterTable| -> String {
        match decompose_character(&product, table) {
            Ok(d) => {
                let map: BTreeMap<Weight, usize> = d.factors.into_iter().collect();
                let mut parts: Vec<String> = map
                    .iter()
                    .rev()
                    .map(|(w, m)| {
                        let name = if *w == Weight::ZERO {
                            "k".to_string()
                        } else {
                            format!("L({},{})", w.a, w.b)
                        };
                        if *m == 1 { name } else { format!("{m}{name}") }
                    })
                    .collect();
                if !d.residual.is_empty() {
                    parts.push(format!("residual of dim {}", d.residual.dim()));
                }
                parts.join(" + ")
            }
            Err(w) => format!("non-dominant maximal weight {w}"),
        }
    };
    let row = Row::new(
        "ch L(1,1) x L(1,1) in simple characters",
        "L(3,0) + L(2,2) + 2L(1,1) + L(0,3) + k",
        show(&CharacterTable::simple(p)),
    );
    let note = format!(
        "ch L(1,1) x L(1,1) in Weyl characters: {}",
        show(&CharacterTable::weyl())
    );
    Ok((row, note))
}

fn properties(p: u32) -> Result<(Vec<Row>, Vec<String>), CohomError> {
    let per_module = property_modules(p)
        .par_iter()
        .map(|m| module_properties(p, m))
        .collect::<Result<Vec<_>, _>>()?;
    let mut rows: Vec<Row> = per_module.into_iter().flatten().collect();
    let trivial = label(ModuleFamily::Trivial, 0, 0).build(p)?;
    let violations: Vec<String> = trivial.check().iter().map(|v| v.to_string()).collect();
    rows.push(Row::new("trivial representation axioms", "ok", ok_or(violations)));
    let (row, note) = tensor_rows(p)?;
    rows.push(row);
    let weyl22 = Character::from_map(crate::liealg::weyl_character(2, 2)).dim();
    let simple22 = label(ModuleFamily::Simple, 2, 2).build(p)?.dim();
    Ok((
        rows,
        vec![note, format!("dim L(2,2) = {simple22}, dim V(2,2) = {weyl22}")],
    ))
}
