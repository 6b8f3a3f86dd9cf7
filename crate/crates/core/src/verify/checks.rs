//! The individual checks. Each one evaluates its hypothesis flags per index,
//! short-circuiting at the first false flag, and then asserts its conclusion
//! over every qualifying element or subgroup.

use std::cell::{OnceCell, RefCell};
use std::collections::BTreeMap;
use std::rc::Rc;

use serde_json::{json, Value};

use super::report::{GroupSummary, TableSummary};
use super::{CheckRecord, Status, VerifyConfig};
use crate::arith;
use crate::characters::{character_table_with_classes, irr_over, v_from_table, CharacterTable};
use crate::error::Error;
use crate::group::{quotient::quotient, GroupRep};
use crate::series::{camina_data, h1_condition, v_series, CaminaData, SeriesProfile};
use crate::subgroup::{
    center, centralizer_mod_unchecked, commutator_subgroup, invariant_intermediate_subgroups,
    normal_subgroups_within, section_abelian_invariants, SubgroupSet,
};

/// Why a computation needed by a check did not produce a value.
#[derive(Clone, Debug)]
pub(crate) enum Failure {
    Cap(String),
    Broken(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_cap() {
            Failure::Cap(e.to_string())
        } else {
            Failure::Broken(e.to_string())
        }
    }
}

type Outcome<T = ()> = Result<T, Failure>;

/// The `H_1` condition evaluated on every `N` with `V_k <= N < G_k`.
#[derive(Debug)]
pub(crate) struct H1Data {
    candidates: Vec<SubgroupSet>,
    condition: Vec<bool>,
}

impl H1Data {
    fn holds(&self) -> bool {
        self.condition.iter().all(|&c| c)
    }

    fn exists(&self) -> bool {
        self.condition.iter().any(|&c| c)
    }

    fn first_violation(&self) -> Option<&SubgroupSet> {
        self.condition
            .iter()
            .position(|&c| !c)
            .map(|i| &self.candidates[i])
    }
}

#[derive(Default)]
struct Rec {
    flags: BTreeMap<String, bool>,
    metrics: BTreeMap<String, Value>,
    passed: usize,
    witness: Option<Value>,
    notes: Vec<String>,
    cap: bool,
}

impl Rec {
    fn flag(&mut self, key: impl Into<String>, value: bool) -> bool {
        self.flags.insert(key.into(), value);
        value
    }

    fn metric(&mut self, key: impl Into<String>, value: impl Into<Value>) {
        self.metrics.insert(key.into(), value.into());
    }

    fn check(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        if ok {
            self.passed += 1;
        } else if self.witness.is_none() {
            self.witness = Some(witness());
        }
    }

    fn absorb(&mut self, f: Failure) {
        match f {
            Failure::Cap(msg) => {
                self.cap = true;
                self.notes.push(msg);
            }
            Failure::Broken(msg) => {
                if self.witness.is_none() {
                    self.witness = Some(json!({ "error": msg }));
                }
            }
        }
    }

    fn finish(mut self, group: &str, id: &str) -> CheckRecord {
        let status = if self.witness.is_some() {
            Status::Fail
        } else if self.cap {
            Status::SkippedCap
        } else if self.passed > 0 {
            Status::Pass
        } else {
            if !self.flags.values().any(|v| !v) {
                self.flags.insert("applicableIndex".into(), false);
            }
            Status::SkippedHypothesis
        };
        CheckRecord {
            group_name: group.to_string(),
            check_id: id.to_string(),
            status,
            hypothesis_flags: self.flags,
            witness: self.witness,
            metrics: self.metrics,
            notes: self.notes,
        }
    }
}

fn at(i: usize, key: &str) -> String {
    format!("k{i}:{key}")
}

fn elements(s: &SubgroupSet) -> Value {
    json!(s.sorted_elements())
}

/// Everything computed once per group and shared by its checks.
pub(crate) struct GroupAnalysis<'a> {
    name: &'a str,
    g: &'a GroupRep,
    config: &'a VerifyConfig,
    profile: SeriesProfile,
    camina: CaminaData,
    second_derived: SubgroupSet,
    h1: RefCell<BTreeMap<usize, Outcome<Rc<H1Data>>>>,
    normals: RefCell<BTreeMap<usize, Outcome<Rc<Vec<SubgroupSet>>>>>,
    table: OnceCell<Result<CharacterTable, Failure>>,
}

impl<'a> GroupAnalysis<'a> {
    pub(crate) fn new(name: &'a str, g: &'a GroupRep, config: &'a VerifyConfig) -> Self {
        let profile = SeriesProfile::compute(g);
        let camina = camina_data(g, &profile);
        let second_derived = commutator_subgroup(g, profile.g(2), profile.g(2));
        GroupAnalysis {
            name,
            g,
            config,
            profile,
            camina,
            second_derived,
            h1: RefCell::default(),
            normals: RefCell::default(),
            table: OnceCell::new(),
        }
    }

    pub(crate) fn run(&self, id: &str) -> CheckRecord {
        let mut rec = Rec::default();
        let result = match id {
            "sandwich" => self.sandwich(&mut rec),
            "elem-abelian" => self.elem_abelian(&mut rec),
            "def-collapse" => self.def_collapse(&mut rec),
            "v-double-def" => self.v_double_def(&mut rec),
            "char-orthogonality" => self.char_orthogonality(&mut rec),
            "lewis-index" => self.lewis_index(&mut rec),
            "lewis-D3" => self.lewis_d3(&mut rec),
            "H1-k3" => self.h1_k3(&mut rec),
            "lem-hone" => self.lem_hone(&mut rec),
            "lem-classsize-p" => self.lem_classsize_p(&mut rec),
            "lem-quotient-V" => self.lem_quotient_v(&mut rec),
            "lem-classsize-H1" => self.lem_classsize_h1(&mut rec),
            "lem-char-vanish" => self.lem_char_vanish(&mut rec),
            "lem-DleE" => self.lem_d_le_e(&mut rec),
            "rem-DleE" => self.rem_d_le_e(&mut rec),
            "rem-H1-DE" => self.rem_h1_de(&mut rec),
            "lem-DiBound" => self.lem_di_bound(&mut rec),
            "lem-G/K-iso" => self.lem_gk_iso(&mut rec),
            "cor-GiVi-bound" => self.cor_givi_bound(&mut rec),
            "lem-KleD" => self.lem_k_le_d(&mut rec),
            "cor-DleD" => self.cor_d_le_d(&mut rec),
            "lem-EBound" => self.lem_e_bound(&mut rec),
            "thm1" => self.thm1(&mut rec),
            "thm2a" | "thm2b" | "thm2c" | "thm2d" => self.thm2(id, &mut rec),
            "thm3" => self.thm3(&mut rec),
            "macdonald-D3" => self.macdonald_d3(&mut rec),
            other => unreachable!("unknown check id {other}"),
        };
        if let Err(f) = result {
            rec.absorb(f);
        }
        rec.finish(self.name, id)
    }

    pub(crate) fn summary(&self, tags: &[String]) -> GroupSummary {
        let p = &self.profile;
        let companion = |f: &dyn Fn(usize) -> Option<usize>| -> BTreeMap<usize, usize> {
            p.companions
                .keys()
                .filter_map(|&i| f(i).map(|o| (i, o)))
                .collect()
        };
        GroupSummary {
            name: self.name.to_string(),
            tags: tags.to_vec(),
            order: self.g.order(),
            class_count: p.classes.len(),
            nilpotence_class: p.nilpotence_class,
            prime: p.prime,
            section_prime: p.section_prime(),
            lower_orders: p.lower.iter().map(SubgroupSet::order).collect(),
            vanishing_orders: p.vanishing.iter().map(SubgroupSet::order).collect(),
            y_orders: companion(&|i| p.y(i).map(SubgroupSet::order)),
            d_orders: companion(&|i| p.d(i).map(SubgroupSet::order)),
            e_orders: companion(&|i| p.e(i).map(SubgroupSet::order)),
            index_g_v1: p.v(1).index_in(p.g(1)),
            index_g_d3: p.index_d3(),
            n: p.n(),
            camina: self.camina.clone(),
            character_table: self
                .table
                .get()
                .and_then(|t| t.as_ref().ok())
                .map(|t| TableSummary {
                    prime: t.prime,
                    conductor: t.conductor(),
                    degrees: t.degrees.clone(),
                }),
        }
    }

    fn depth(&self) -> usize {
        self.profile.depth()
    }

    fn below(&self, i: usize) -> bool {
        self.profile.v_below_g(i)
    }

    /// `G'/V_i` is abelian.
    fn derived_abelian_mod(&self, i: usize) -> bool {
        self.second_derived.is_subgroup_of(self.profile.v(i))
    }

    fn prime_order(&self, s: &SubgroupSet) -> bool {
        arith::is_prime(s.order() as u64)
    }

    fn y(&self, i: usize) -> &SubgroupSet {
        self.profile.y(i).expect("companion index in range")
    }

    fn d(&self, i: usize) -> &SubgroupSet {
        self.profile.d(i).expect("companion index in range")
    }

    fn e(&self, i: usize) -> &SubgroupSet {
        self.profile.e(i).expect("companion index in range")
    }

    fn index(&self, s: &SubgroupSet) -> usize {
        self.g.order() / s.order()
    }

    /// `G_{i-1} ∩ Y_i`.
    fn lower_meet_y(&self, i: usize) -> SubgroupSet {
        self.profile.g(i - 1).intersection(self.g, self.y(i))
    }

    fn h1(&self, k: usize) -> Outcome<Rc<H1Data>> {
        if let Some(r) = self.h1.borrow().get(&k) {
            return r.clone();
        }
        let r = self.compute_h1(k);
        self.h1.borrow_mut().insert(k, r.clone());
        r
    }

    fn compute_h1(&self, k: usize) -> Outcome<Rc<H1Data>> {
        let p = &self.profile;
        if !self.below(k) {
            return Ok(Rc::new(H1Data {
                candidates: Vec::new(),
                condition: Vec::new(),
            }));
        }
        let candidates =
            invariant_intermediate_subgroups(self.g, p.v(k), p.g(k), self.config.section_cap)?;
        let condition = candidates
            .iter()
            .map(|n| h1_condition(self.g, p, k, n))
            .collect::<Result<Vec<bool>, Error>>()?;
        Ok(Rc::new(H1Data {
            candidates,
            condition,
        }))
    }

    /// `G_k` is `H_1`, recording the flag and the number of `N` examined.
    fn h1_flag(&self, rec: &mut Rec, k: usize) -> Outcome<bool> {
        let h = self.h1(k)?;
        rec.metric(at(k, "h1Candidates"), h.candidates.len());
        Ok(rec.flag(at(k, "Gk-H1"), h.holds()))
    }

    fn normals_below(&self, k: usize) -> Outcome<Rc<Vec<SubgroupSet>>> {
        if let Some(r) = self.normals.borrow().get(&k) {
            return r.clone();
        }
        let gk = self.profile.g(k);
        let r = normal_subgroups_within(self.g, gk, &self.profile.classes, self.config.normal_cap)
            .map(|all| Rc::new(all.into_iter().filter(|n| n != gk).collect::<Vec<_>>()))
            .map_err(Failure::from);
        self.normals.borrow_mut().insert(k, r.clone());
        r
    }

    fn table(&self) -> Outcome<&CharacterTable> {
        self.table
            .get_or_init(|| {
                if self.g.order() > self.config.char_cap {
                    return Err(Error::CharacterCap {
                        order: self.g.order(),
                        cap: self.config.char_cap,
                    }
                    .into());
                }
                character_table_with_classes(self.g, self.profile.classes.clone())
                    .map_err(Failure::from)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `cl(x) = xN`.
    fn class_is_coset(&self, x: usize, n: &SubgroupSet) -> bool {
        let cls = &self.profile.classes.classes[self.profile.classes.class_of[x]];
        if cls.len() != n.order() {
            return false;
        }
        let mut coset: Vec<usize> = n.elements().map(|k| self.g.mul(x, k)).collect();
        coset.sort_unstable();
        *cls == coset
    }

    fn sandwich(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        for i in 1..=self.depth() {
            let ok = p.g(i + 1).is_subgroup_of(p.v(i)) && p.v(i).is_subgroup_of(p.g(i));
            rec.check(ok, || json!({ "index": i, "G_i+1": elements(p.g(i + 1)), "V_i": elements(p.v(i)), "G_i": elements(p.g(i)) }));
        }
        Ok(())
    }

    fn elem_abelian(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        if !rec.flag("V2<G2", self.below(2)) {
            return Ok(());
        }
        let Some(prime) = p.section_prime() else {
            let indices: Vec<usize> = (1..=self.depth())
                .map(|i| p.v(i).index_in(p.g(i)))
                .collect();
            rec.check(false, || json!({ "sectionIndices": indices }));
            return Ok(());
        };
        rec.metric("p", prime);
        for i in 1..=self.depth() {
            let (gi, vi) = (p.g(i), p.v(i));
            let power = gi.elements().find(|&x| !vi.contains(self.g.pow(x, prime)));
            rec.check(
                power.is_none(),
                || json!({ "index": i, "x": power, "reason": "x^p outside V_i" }),
            );
            let pair = gi
                .generators()
                .iter()
                .flat_map(|&a| gi.generators().iter().map(move |&b| (a, b)));
            let bad = pair
                .into_iter()
                .find(|&(a, b)| !vi.contains(self.g.commutator(a, b)));
            rec.check(
                bad.is_none(),
                || json!({ "index": i, "pair": bad, "reason": "[a,b] outside V_i" }),
            );
        }
        Ok(())
    }

    fn def_collapse(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        let z = center(self.g);
        for i in 3..=self.depth() {
            if !rec.flag(at(i, "Vi=1"), p.v(i).is_trivial()) {
                continue;
            }
            let prev = p.g(i - 1);
            let c = SubgroupSet::from_elements(
                self.g,
                (0..self.g.order()).filter(|&x| {
                    prev.elements()
                        .all(|y| self.g.mul(x, y) == self.g.mul(y, x))
                }),
            )?;
            let ok = *self.y(i) == z && *self.d(i) == c;
            rec.check(ok, || {
                json!({ "index": i, "Y_i": elements(self.y(i)), "Z": elements(&z), "D_i": elements(self.d(i)), "C_G(G_i-1)": elements(&c) })
            });
        }
        Ok(())
    }

    fn v_double_def(&self, rec: &mut Rec) -> Outcome {
        let t = self.table()?;
        let from_chars = v_from_table(self.g, t);
        let from_classes = self.profile.v(1);
        rec.metric("|V|", from_classes.order());
        rec.check(from_chars == *from_classes, || {
            json!({ "fromClasses": elements(from_classes), "fromCharacters": elements(&from_chars) })
        });
        Ok(())
    }

    fn char_orthogonality(&self, rec: &mut Rec) -> Outcome {
        let t = self.table()?;
        rec.metric("classes", t.len());
        rec.metric("prime", t.prime);
        rec.metric("conductor", t.conductor());
        rec.metric("sumSquares", t.degrees.iter().map(|d| d * d).sum::<u64>());
        let checked = t.check_orthogonality();
        rec.check(
            checked.is_ok(),
            || json!({ "error": checked.as_ref().err().map(ToString::to_string) }),
        );
        let linear = t.degrees.iter().filter(|&&d| d == 1).count();
        let abelianization = self.profile.g(2).index_in(self.profile.g(1));
        rec.metric("linear", linear);
        rec.check(
            linear == abelianization,
            || json!({ "linear": linear, "|G:G'|": abelianization }),
        );
        Ok(())
    }

    fn lewis_index(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        if !rec.flag("V3<G3", self.below(3)) {
            return Ok(());
        }
        let a = p.v(1).index_in(p.g(1)) as u64;
        let b = p.v(2).index_in(p.g(2)) as u64;
        rec.metric("|G:V1|", a);
        rec.metric("|G':V2|", b);
        let prime = p.section_prime();
        let n = p.n();
        rec.metric("p", json!(prime));
        rec.metric("n", json!(n));
        let ok = a == b * b
            && n.is_some_and(|n| n >= 1)
            && prime.is_some_and(|q| arith::log_exact(a, q) == n.map(|n| 2 * n));
        rec.check(
            ok,
            || json!({ "|G:V1|": a, "|G':V2|": b, "p": prime, "n": n }),
        );
        Ok(())
    }

    fn lewis_d3(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        if !rec.flag("V3<G3", self.below(3)) {
            return Ok(());
        }
        let idx = self.index(self.d(3));
        rec.metric("|G:D3|", idx);
        let pn = p.section_prime().zip(p.n()).map(|(q, n)| q.pow(n) as usize);
        rec.metric("p^n", json!(pn));
        let d3_is_v1 = self.d(3) == p.v(1);
        rec.check(pn == Some(idx) || d3_is_v1, || json!({ "|G:D3|": idx, "p^n": pn, "D3": elements(self.d(3)), "V1": elements(p.v(1)) }));
        Ok(())
    }

    fn h1_k3(&self, rec: &mut Rec) -> Outcome {
        if !rec.flag("V3<G3", self.below(3)) {
            return Ok(());
        }
        let h = self.h1(3)?;
        rec.metric("candidates", h.candidates.len());
        rec.check(
            h.holds(),
            || json!({ "N": h.first_violation().map(elements) }),
        );
        Ok(())
    }

    fn lem_hone(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        for k in 3..=self.depth() {
            if !rec.flag(at(k, "Vk<Gk"), self.below(k)) {
                continue;
            }
            let h = self.h1(k)?;
            if !rec.flag(at(k, "exists-N"), h.exists()) {
                continue;
            }
            let meet = self.lower_meet_y(k);
            rec.check(
                *p.v(k - 1) == meet,
                || json!({ "k": k, "V_k-1": elements(p.v(k - 1)), "G_k-1∩Y_k": elements(&meet) }),
            );
        }
        Ok(())
    }

    fn lem_classsize_p(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        for i in 3..=self.depth() {
            let ok = rec.flag(at(i, "nilpotent"), p.nilpotence_class.is_some())
                && rec.flag(at(i, "|Gi|=p"), self.prime_order(p.g(i)))
                && rec.flag(at(i, "Vi=1"), p.v(i).is_trivial());
            if !ok {
                continue;
            }
            let y = self.y(i);
            let cases: Vec<usize> = p.g(i - 1).elements().filter(|&x| !y.contains(x)).collect();
            rec.metric(at(i, "cases"), cases.len());
            let bad = cases
                .iter()
                .copied()
                .find(|&x| !self.class_is_coset(x, p.g(i)));
            rec.check(bad.is_none(), || json!({ "index": i, "x": bad }));
        }
        Ok(())
    }

    fn lem_quotient_v(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        for k in 3..=self.depth() {
            if !rec.flag(at(k, "Vk<Gk"), self.below(k)) {
                continue;
            }
            let normals = self.normals_below(k)?;
            rec.metric(at(k, "normalSubgroups"), normals.len());
            for n in normals.iter() {
                let q = quotient(self.g, n)?;
                let vq = v_series(&q.target);
                let term = |i: usize| &vq[i.min(vq.len()) - 1];
                let bad = (2..=k).find(|&i| *term(i) != q.image(p.v(i)));
                rec.check(bad.is_none(), || {
                    let i = bad.unwrap();
                    json!({ "k": k, "N": elements(n), "i": i, "|V_i(G/N)|": term(i).order(), "|V_iN/N|": q.image(p.v(i)).order() })
                });
            }
        }
        Ok(())
    }

    fn lem_classsize_h1(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        for i in 3..=self.depth() {
            if !(rec.flag(at(i, "Vi=1"), p.v(i).is_trivial()) && self.h1_flag(rec, i)?) {
                continue;
            }
            let v = p.v(i - 1);
            let cases: Vec<usize> = p.g(i - 1).elements().filter(|&x| !v.contains(x)).collect();
            rec.metric(at(i, "cases"), cases.len());
            let bad = cases
                .iter()
                .copied()
                .find(|&x| !self.class_is_coset(x, p.g(i)));
            rec.check(bad.is_none(), || json!({ "index": i, "x": bad }));
        }
        Ok(())
    }

    fn lem_char_vanish(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        for k in 3..=self.depth() {
            if !(rec.flag(at(k, "Vk=1"), p.v(k).is_trivial()) && self.h1_flag(rec, k)?) {
                continue;
            }
            let t = self.table()?;
            let rows = irr_over(t, p.g(k));
            let classes: Vec<usize> = (0..t.classes.len())
                .filter(|&c| {
                    let x = t.classes.representative(c);
                    p.g(k - 1).contains(x) && !p.v(k - 1).contains(x)
                })
                .collect();
            rec.metric(at(k, "rows"), rows.len());
            rec.metric(at(k, "classes"), classes.len());
            let bad = rows
                .iter()
                .flat_map(|&r| classes.iter().map(move |&c| (r, c)))
                .find(|&(r, c)| !t.value(r, c).is_zero());
            rec.check(bad.is_none(), || {
                let (r, c) = bad.unwrap();
                json!({ "k": k, "row": r, "class": c, "representative": t.classes.representative(c), "value": t.value(r, c).to_string() })
            });
        }
        Ok(())
    }

    fn lem_d_le_e(&self, rec: &mut Rec) -> Outcome {
        for i in 4..=self.depth() {
            let ok = rec.flag(at(i, "Vi<Gi"), self.below(i))
                && rec.flag(at(i, "G'/Vi-abelian"), self.derived_abelian_mod(i));
            if ok {
                rec.check(self.d(i).is_subgroup_of(self.e(i)), || json!({ "index": i, "D_i": elements(self.d(i)), "E_i": elements(self.e(i)) }));
            }
        }
        Ok(())
    }

    fn rem_d_le_e(&self, rec: &mut Rec) -> Outcome {
        for i in 4..=self.depth() {
            rec.check(self.d(i - 1).is_subgroup_of(self.e(i)), || {
                json!({ "index": i, "D_i-1": elements(self.d(i - 1)), "E_i": elements(self.e(i)) })
            });
        }
        Ok(())
    }

    fn rem_h1_de(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        for i in 4..=self.depth() {
            if !(rec.flag(at(i, "Vi<Gi"), self.below(i)) && self.h1_flag(rec, i)?) {
                continue;
            }
            let meet = self.lower_meet_y(i);
            rec.check(*p.v(i - 1) == meet && self.d(i - 1) == self.e(i), || {
                json!({ "index": i, "V_i-1": elements(p.v(i - 1)), "G_i-1∩Y_i": elements(&meet), "D_i-1": elements(self.d(i - 1)), "E_i": elements(self.e(i)) })
            });
        }
        Ok(())
    }

    fn lem_di_bound(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        for i in 3..=self.depth() {
            let ok = rec.flag(at(i, "Vi=1"), p.v(i).is_trivial())
                && rec.flag(at(i, "|Gi|=p"), self.prime_order(p.g(i)));
            if !ok {
                continue;
            }
            let lhs = self.index(self.d(i));
            let rhs = self.lower_meet_y(i).index_in(p.g(i - 1));
            rec.metric(at(i, "|G:D_i|"), lhs);
            rec.metric(at(i, "|G_i-1:G_i-1∩Y_i|"), rhs);
            rec.check(
                lhs <= rhs,
                || json!({ "index": i, "|G:D_i|": lhs, "|G_i-1:G_i-1∩Y_i|": rhs }),
            );
        }
        Ok(())
    }

    fn lem_gk_iso(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        let whole = SubgroupSet::whole(self.g);
        for i in 3..=self.depth() {
            if !self.h1_flag(rec, i)? {
                continue;
            }
            let (vi, gi) = (p.v(i), p.g(i));
            let target = section_abelian_invariants(self.g, vi, gi)?;
            let cases: Vec<usize> = p
                .g(i - 1)
                .elements()
                .filter(|&a| !p.v(i - 1).contains(a))
                .collect();
            rec.metric(at(i, "cases"), cases.len());
            rec.metric(at(i, "|G_i:V_i|"), vi.index_in(gi));
            for a in cases {
                let k = centralizer_mod_unchecked(self.g, vi, &[a]);
                let invariants = section_abelian_invariants(self.g, &k, &whole);
                let ok = k.index_in(&whole) == vi.index_in(gi)
                    && invariants.as_ref().is_ok_and(|inv| *inv == target);
                rec.check(ok, || {
                    json!({ "index": i, "a": a, "|G:K|": k.index_in(&whole), "|G_i:V_i|": vi.index_in(gi),
                        "G/K": invariants.as_ref().map_err(ToString::to_string), "G_i/V_i": target })
                });
            }
        }
        Ok(())
    }

    fn cor_givi_bound(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        for i in 3..=self.depth() {
            if !self.h1_flag(rec, i)? {
                continue;
            }
            let lhs = p.v(i).index_in(p.g(i));
            let rhs = self.index(self.d(i));
            rec.check(
                lhs <= rhs,
                || json!({ "index": i, "|G_i:V_i|": lhs, "|G:D_i|": rhs }),
            );
        }
        Ok(())
    }

    /// `i >= 4`, `V_i < G_i`, `G'/V_i` abelian and `G_{i-1}` is `H_1`.
    fn kled_hypotheses(&self, rec: &mut Rec, i: usize) -> Outcome<bool> {
        if !(rec.flag(at(i, "Vi<Gi"), self.below(i))
            && rec.flag(at(i, "G'/Vi-abelian"), self.derived_abelian_mod(i)))
        {
            return Ok(false);
        }
        let h = self.h1(i - 1)?;
        Ok(rec.flag(at(i, "Gi-1-H1"), h.holds()))
    }

    fn lem_k_le_d(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        for i in 4..=self.depth() {
            if !self.kled_hypotheses(rec, i)? {
                continue;
            }
            let cases: Vec<usize> = p
                .g(i - 2)
                .elements()
                .filter(|&a| !p.v(i - 2).contains(a))
                .collect();
            rec.metric(at(i, "cases"), cases.len());
            for a in cases {
                let k = centralizer_mod_unchecked(self.g, p.v(i - 1), &[a]);
                rec.check(
                    k.is_subgroup_of(self.d(i)),
                    || json!({ "index": i, "a": a, "K": elements(&k), "D_i": elements(self.d(i)) }),
                );
            }
        }
        Ok(())
    }

    fn cor_d_le_d(&self, rec: &mut Rec) -> Outcome {
        for i in 4..=self.depth() {
            if self.kled_hypotheses(rec, i)? {
                rec.check(self.d(i - 1).is_subgroup_of(self.d(i)), || {
                    json!({ "index": i, "D_i-1": elements(self.d(i - 1)), "D_i": elements(self.d(i)) })
                });
            }
        }
        Ok(())
    }

    fn lem_e_bound(&self, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        for i in 4..=self.depth() {
            if !rec.flag(at(i, "Vi<Gi"), self.below(i)) {
                continue;
            }
            if !rec.flag(at(i, "Gi-1-H1"), self.h1(i - 1)?.holds()) {
                continue;
            }
            let lhs = self.index(self.e(i));
            let rhs = self.lower_meet_y(i).index_in(p.g(i - 1));
            rec.check(
                lhs >= rhs,
                || json!({ "index": i, "|G:E_i|": lhs, "|G_i-1:G_i-1∩Y_i|": rhs }),
            );
        }
        Ok(())
    }

    /// `V_k < G_k` and `G'/V_k` abelian.
    fn theorem_base(&self, rec: &mut Rec, k: usize) -> bool {
        rec.flag(at(k, "Vk<Gk"), self.below(k))
            && rec.flag(at(k, "G'/Vk-abelian"), self.derived_abelian_mod(k))
    }

    fn thm1(&self, rec: &mut Rec) -> Outcome {
        'k: for k in 3..=self.depth() {
            if !self.theorem_base(rec, k) {
                continue;
            }
            for j in 3..=k {
                if !rec.flag(at(k, &format!("G{j}-H1")), self.h1(j)?.holds()) {
                    continue 'k;
                }
            }
            rec.check(
                self.d(k) == self.d(3),
                || json!({ "k": k, "D_k": elements(self.d(k)), "D_3": elements(self.d(3)) }),
            );
        }
        Ok(())
    }

    fn thm2(&self, id: &str, rec: &mut Rec) -> Outcome {
        let p = &self.profile;
        let d3 = self.index(self.d(3));
        rec.metric("|G:D3|", d3);
        let first = if id == "thm2a" { 4 } else { 3 };
        for k in first..=self.depth() {
            if !self.theorem_base(rec, k) {
                continue;
            }
            match id {
                "thm2a" => {
                    let lhs = p.v(k - 1).index_in(p.g(k - 1));
                    rec.metric(at(k, "|G_k-1:V_k-1|"), lhs);
                    rec.check(
                        lhs == d3,
                        || json!({ "k": k, "|G_k-1:V_k-1|": lhs, "|G:D3|": d3 }),
                    );
                }
                "thm2b" => {
                    rec.check(self.d(k) == self.d(3), || json!({ "k": k, "D_k": elements(self.d(k)), "D_3": elements(self.d(3)) }));
                }
                "thm2c" => {
                    let h = self.h1(k)?;
                    rec.metric(at(k, "h1Candidates"), h.candidates.len());
                    rec.check(
                        h.holds(),
                        || json!({ "k": k, "N": h.first_violation().map(elements) }),
                    );
                }
                _ => {
                    let lhs = p.v(k).index_in(p.g(k));
                    rec.metric(at(k, "|G_k:V_k|"), lhs);
                    rec.check(
                        lhs <= d3,
                        || json!({ "k": k, "|G_k:V_k|": lhs, "|G:D3|": d3 }),
                    );
                }
            }
        }
        Ok(())
    }

    /// `p^n` with `|G:G'| = p^{2n}`, for a Camina group of class 3.
    fn camina_pn(&self, rec: &mut Rec) -> Option<usize> {
        if !rec.flag("camina-class3", self.camina.class3) {
            return None;
        }
        let pn = self
            .profile
            .prime
            .zip(self.camina.n_from_index)
            .map(|(q, n)| q.pow(n) as usize);
        rec.metric("p^n", json!(pn));
        rec.check(pn.is_some(), || json!({ "|G:G'|": self.profile.g(2).index_in(self.profile.g(1)), "reason": "not an even prime power" }));
        pn
    }

    fn thm3(&self, rec: &mut Rec) -> Outcome {
        if let Some(pn) = self.camina_pn(rec) {
            let g3 = self.profile.g(3).order();
            rec.metric("|G_3|", g3);
            rec.check(g3 <= pn, || json!({ "|G_3|": g3, "p^n": pn }));
        }
        Ok(())
    }

    fn macdonald_d3(&self, rec: &mut Rec) -> Outcome {
        if let Some(pn) = self.camina_pn(rec) {
            let idx = self.index(self.d(3));
            rec.metric("|G:D3|", idx);
            rec.check(idx == pn, || json!({ "|G:D3|": idx, "p^n": pn }));
        }
        Ok(())
    }
}
