//! The Region Select game: moves, solvability, changing sets and ineffective
//! sets with prohibited and compulsory regions.

use serde::Serialize;

use crate::diagram::{BoardSource, LampBoard};
use crate::error::{Error, Result};
use crate::gf2::{self, BitVec, Gf2Matrix, COSET_ENUMERATION_LIMIT};

/// Bits over the regions of a board.
pub type RegionSet = BitVec;

#[derive(Clone, Debug)]
pub struct GameInstance {
    board: LampBoard,
    matrix: Gf2Matrix,
    lamps: BitVec,
    history: Vec<usize>,
}

/// Either a set of regions or the lamp rows proving none exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Solved(RegionSet),
    Infeasible(BitVec),
}

impl Verdict {
    pub fn witness(&self) -> Option<&RegionSet> {
        match self {
            Verdict::Solved(x) => Some(x),
            Verdict::Infeasible(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&BitVec> {
        match self {
            Verdict::Solved(_) => None,
            Verdict::Infeasible(c) => Some(c),
        }
    }

    pub fn is_solved(&self) -> bool {
        matches!(self, Verdict::Solved(_))
    }

    pub fn to_json(&self) -> VerdictJson {
        match self {
            Verdict::Solved(x) => VerdictJson { solvable: true, regions: Some(x.ones().collect()), certificate: None },
            Verdict::Infeasible(c) => {
                VerdictJson { solvable: false, regions: None, certificate: Some(c.ones().collect()) }
            }
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerdictJson {
    pub solvable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub regions: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Vec<usize>>,
}

impl GameInstance {
    pub fn new(board: LampBoard) -> Self {
        let matrix = board.incidence_matrix();
        let lamps = board.lamps().clone();
        GameInstance { board, matrix, lamps, history: Vec::new() }
    }

    pub fn board(&self) -> &LampBoard {
        &self.board
    }

    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    pub fn lamps(&self) -> &BitVec {
        &self.lamps
    }

    pub fn history(&self) -> &[usize] {
        &self.history
    }

    pub fn num_regions(&self) -> usize {
        self.matrix.cols()
    }

    pub fn num_sites(&self) -> usize {
        self.matrix.rows()
    }

    pub fn is_cleared(&self) -> bool {
        self.lamps.weight() == self.lamps.len()
    }

    /// Lamps switched by selecting `r`, read off the region's corners.
    pub fn region_toggles(&self, r: usize) -> Result<BitVec> {
        if r >= self.num_regions() {
            return Err(Error::UnknownRegion(r));
        }
        Ok(match self.board.source() {
            BoardSource::Matrix(m) => m.column(r),
            source => {
                let region = &source.map().unwrap().regions()[r];
                BitVec::from_indices(
                    self.num_sites(),
                    self.board
                        .lamp_sites()
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| region.corners_at(v) % 2 == 1)
                        .map(|(i, _)| i),
                )
            }
        })
    }

    pub fn apply_rcc(&self, r: usize) -> Result<GameInstance> {
        let toggles = self.region_toggles(r)?;
        let mut next = self.clone();
        next.lamps.xor_assign(&toggles);
        next.history.push(r);
        Ok(next)
    }

    /// Plays every region of `set` in increasing order.
    pub fn apply_set(&self, set: &RegionSet) -> Result<GameInstance> {
        self.check_set(set)?;
        set.ones().try_fold(self.clone(), |g, r| g.apply_rcc(r))
    }

    /// Lamps switched by playing `set`, computed move by move.
    pub fn effect(&self, set: &RegionSet) -> Result<BitVec> {
        self.check_set(set)?;
        let mut acc = BitVec::zeros(self.num_sites());
        for r in set.ones() {
            acc.xor_assign(&self.region_toggles(r)?);
        }
        Ok(acc)
    }

    fn check_set(&self, set: &RegionSet) -> Result<()> {
        if set.len() != self.num_regions() {
            return Err(Error::Dimension { expected: self.num_regions(), actual: set.len() });
        }
        Ok(())
    }

    fn check_site(&self, site: usize) -> Result<()> {
        if site >= self.num_sites() {
            return Err(Error::UnknownSite(site));
        }
        Ok(())
    }

    fn check_regions(&self, regions: &[usize]) -> Result<()> {
        match regions.iter().find(|&&r| r >= self.num_regions()) {
            Some(&r) => Err(Error::UnknownRegion(r)),
            None => Ok(()),
        }
    }

    /// Replays `set` and panics if it does not switch exactly `target`.
    /// A mismatch here means the linear algebra and the board disagree.
    fn verified(&self, set: RegionSet, target: &BitVec) -> Result<RegionSet> {
        let effect = self.effect(&set)?;
        assert_eq!(&effect, target, "witness {} does not switch the requested lamps", set.to_bit_string());
        Ok(set)
    }

    fn verify_certificate(&self, cert: &BitVec, b: &BitVec) {
        let combined = self.matrix.left_mul(cert).expect("certificate length");
        assert!(combined.is_zero() && cert.dot(b), "certificate does not read 0 = 1");
    }

    /// Minimum-weight solution when the kernel is small enough to walk,
    /// otherwise the reduced-echelon particular solution.
    fn pick(&self, b: &BitVec) -> Result<Verdict> {
        let outcome = gf2::solve(&self.matrix, b)?;
        if let Some(cert) = outcome.certificate {
            self.verify_certificate(&cert, b);
            return Ok(Verdict::Infeasible(cert));
        }
        let x = if outcome.kernel_basis.len() <= COSET_ENUMERATION_LIMIT {
            gf2::min_weight_solution(&self.matrix, b, self.num_regions())?.expect("system is solvable")
        } else {
            outcome.particular.expect("solved outcome has a particular solution")
        };
        Ok(Verdict::Solved(self.verified(x, b)?))
    }

    /// A set of regions that lights every lamp from the current state.
    pub fn solve_game(&self) -> Result<Verdict> {
        let dark = BitVec::from_bools(&self.lamps.to_bools().iter().map(|&on| !on).collect::<Vec<_>>());
        self.pick(&dark)
    }

    /// Whether the lamp at `site` can be switched on its own.
    pub fn changeable(&self, site: usize) -> Result<Verdict> {
        self.check_site(site)?;
        self.pick(&BitVec::unit(self.num_sites(), site))
    }

    /// A basis for the region sets that switch nothing.
    pub fn ineffective_sets(&self) -> Result<Vec<RegionSet>> {
        let zero = BitVec::zeros(self.num_sites());
        let outcome = gf2::solve(&self.matrix, &zero)?;
        outcome.kernel_basis.into_iter().map(|k| self.verified(k, &zero)).collect()
    }

    /// A set that switches only `site`, avoids `prohibited` and contains
    /// `compulsory`; `None` when no such set exists.
    pub fn constrained_changing_set(
        &self,
        site: usize,
        prohibited: &[usize],
        compulsory: &[usize],
    ) -> Result<Option<RegionSet>> {
        self.check_site(site)?;
        self.constrained(&BitVec::unit(self.num_sites(), site), prohibited, compulsory)
    }

    /// An ineffective set avoiding `prohibited` and containing `compulsory`.
    /// With no compulsory regions a nonempty set is preferred; the empty set
    /// is returned only when it is the sole candidate.
    pub fn constrained_ineffective_set(
        &self,
        prohibited: &[usize],
        compulsory: &[usize],
    ) -> Result<Option<RegionSet>> {
        let zero = BitVec::zeros(self.num_sites());
        if !compulsory.is_empty() {
            return self.constrained(&zero, prohibited, compulsory);
        }
        self.check_regions(prohibited)?;
        let outcome = gf2::solve_constrained(&self.matrix, &zero, &[], prohibited)?;
        let set = outcome.kernel_basis.into_iter().next().unwrap_or_else(|| BitVec::zeros(self.num_regions()));
        Ok(Some(self.verified(set, &zero)?))
    }

    fn constrained(&self, b: &BitVec, prohibited: &[usize], compulsory: &[usize]) -> Result<Option<RegionSet>> {
        self.check_regions(prohibited)?;
        self.check_regions(compulsory)?;
        let outcome = gf2::solve_constrained(&self.matrix, b, compulsory, prohibited)?;
        match outcome.particular {
            None => Ok(None),
            Some(x) => {
                debug_assert!(compulsory.iter().all(|&r| x.get(r)) && prohibited.iter().all(|&r| !x.get(r)));
                self.verified(x, b).map(Some)
            }
        }
    }

    /// Builds an ineffective set containing `r1` and avoiding `r2` as
    /// `{r1} ⊕ S_1 ⊕ … ⊕ S_n`, where `S_i` switches only the i-th lamp that
    /// `r1` switches and avoids both regions. `None` if some `S_i` is missing.
    pub fn symmetric_difference_ineffective_set(&self, r1: usize, r2: usize) -> Result<Option<RegionSet>> {
        self.check_regions(&[r1, r2])?;
        let mut set = BitVec::unit(self.num_regions(), r1);
        for site in self.region_toggles(r1)?.ones() {
            match self.constrained_changing_set(site, &[r1, r2], &[])? {
                Some(s) => set.xor_assign(&s),
                None => return Ok(None),
            }
        }
        assert!(set.get(r1) && !set.get(r2));
        Ok(Some(self.verified(set, &BitVec::zeros(self.num_sites()))?))
    }

    /// A set containing `r1`, avoiding `r2` and switching only `site`, built
    /// from an unconstrained changing set corrected by ineffective sets.
    pub fn corrected_changing_set(&self, site: usize, r1: usize, r2: usize) -> Result<Option<RegionSet>> {
        self.check_site(site)?;
        let Some(mut t) = self.changeable(site)?.witness().cloned() else {
            return Ok(None);
        };
        if !t.get(r1) {
            let Some(s1) = self.symmetric_difference_ineffective_set(r1, r2)? else {
                return Ok(None);
            };
            t.xor_assign(&s1);
        }
        if t.get(r2) {
            let Some(s2) = self.symmetric_difference_ineffective_set(r2, r1)? else {
                return Ok(None);
            };
            t.xor_assign(&s2);
        }
        Ok(Some(self.verified(t, &BitVec::unit(self.num_sites(), site))?))
    }
}
