//! Monte-Carlo codebook growth.
//!
//! All sequences start empty and grow in lockstep. In each round every
//! sequence, in index order, draws a sample of constrained suffixes and keeps
//! the one that minimises the summed pair loss against the sequences already
//! extended in that round. Growth stops after the first complete round in
//! which every pair is out of reach under the check profile.

use std::collections::HashMap;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::constraints::{generate_candidates, ConstraintSpec};
use crate::ecg::{self, EcgPairState};
use crate::edit_model::{EditOp, EditProfile, ErrorSpec};
use crate::error::{Error, Result};

/// How the pair-check profile is obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckSpec {
    /// Channel budget to correct; the check quotas are derived from it.
    Correct(ErrorSpec),
    /// Check quotas given directly.
    Raw { eoi: Vec<EditOp>, eq: Vec<usize> },
}

impl CheckSpec {
    pub fn profile(&self) -> Result<EditProfile> {
        match self {
            CheckSpec::Correct(spec) => spec.check_profile(),
            CheckSpec::Raw { eoi, eq } => EditProfile::new(eoi.clone(), eq.clone()),
        }
    }

    pub fn correction(&self) -> Option<&ErrorSpec> {
        match self {
            CheckSpec::Correct(spec) => Some(spec),
            CheckSpec::Raw { .. } => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GenerationConfig {
    /// Codebook size `m`.
    pub size: usize,
    pub check: CheckSpec,
    pub constraint: ConstraintSpec,
    /// Suffixes sampled per selection.
    pub candidates_per_step: usize,
    pub seed: u64,
    /// Cap on growth rounds.
    pub max_steps: usize,
    /// Extra rounds to run after the total loss first reaches zero.
    pub min_extra_steps: usize,
    /// Worker threads for candidate scoring; 0 lets rayon decide.
    pub threads: usize,
    /// Emit one progress line per round on stderr.
    pub verbose: bool,
}

impl GenerationConfig {
    pub fn new(size: usize, check: CheckSpec) -> Self {
        GenerationConfig {
            size,
            check,
            constraint: ConstraintSpec::default(),
            candidates_per_step: 64,
            seed: 0,
            max_steps: 64,
            min_extra_steps: 0,
            threads: 0,
            verbose: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.size == 0 {
            return Err(Error::InvalidConfig("codebook size must be at least 1".into()));
        }
        if self.candidates_per_step == 0 {
            return Err(Error::InvalidConfig("candidate budget must be at least 1".into()));
        }
        if self.max_steps == 0 {
            return Err(Error::InvalidConfig("step cap must be at least 1".into()));
        }
        self.constraint.validate()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenerationMeta {
    pub seed: u64,
    pub steps: usize,
    pub candidates_per_step: usize,
    pub elapsed: Option<Duration>,
}

/// Equal-length sequences whose every pair is out of reach under `profile`.
#[derive(Debug, Clone, PartialEq)]
pub struct Codebook {
    pub sequences: Vec<Vec<u8>>,
    /// Profile used for pair checks.
    pub profile: Arc<EditProfile>,
    /// Correction budget the check profile was derived from, when known.
    pub correction: Option<ErrorSpec>,
    pub constraint: Option<ConstraintSpec>,
    pub meta: GenerationMeta,
}

impl Codebook {
    /// Codebook size `m`.
    pub fn size(&self) -> usize {
        self.sequences.len()
    }

    /// Sequence length `n`.
    pub fn seq_len(&self) -> usize {
        self.sequences.first().map_or(0, Vec::len)
    }

    pub fn redundancy(&self) -> f64 {
        redundancy(self.seq_len(), self.size())
    }

    pub fn baseline_redundancy(&self) -> f64 {
        baseline_redundancy(self.seq_len())
    }

    /// First pair `(a, b, loss)` that is still confusable, checked from scratch.
    pub fn first_conflict(&self) -> Result<Option<(usize, usize, usize)>> {
        let m = self.size();
        let pairs: Vec<(usize, usize)> = (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect();
        let losses = pairs
            .par_iter()
            .map(|&(a, b)| ecg::pair_loss(self.profile.clone(), &self.sequences[a], &self.sequences[b]))
            .collect::<Result<Vec<_>>>()?;
        Ok(pairs
            .into_iter()
            .zip(losses)
            .find(|&(_, loss)| loss > 0)
            .map(|((a, b), loss)| (a, b, loss)))
    }

    /// Checks every codebook invariant: alphabet, equal lengths, distinct
    /// sequences and zero pair loss.
    pub fn verify(&self) -> Result<()> {
        let n = self.seq_len();
        for (i, s) in self.sequences.iter().enumerate() {
            crate::alphabet::validate(s)?;
            if s.len() != n {
                return Err(Error::InvariantViolation(format!(
                    "sequence {i} has length {}, expected {n}",
                    s.len()
                )));
            }
        }
        let mut seen = HashMap::new();
        for (i, s) in self.sequences.iter().enumerate() {
            if let Some(j) = seen.insert(s.as_slice(), i) {
                return Err(Error::InvariantViolation(format!(
                    "sequences {j} and {i} are identical"
                )));
            }
        }
        match self.first_conflict()? {
            None => Ok(()),
            Some((a, b, loss)) => Err(Error::InvariantViolation(format!(
                "sequences {a} and {b} are confusable (loss {loss})"
            ))),
        }
    }
}

/// `n log2(4) - log2(m)`.
pub fn redundancy(n: usize, m: usize) -> f64 {
    2.0 * n as f64 - (m as f64).log2()
}

/// Closed-form redundancy of the reference single-substitution
/// single-deletion construction: `10 log2(n) + 3 log2(4) + 11`.
pub fn baseline_redundancy(n: usize) -> f64 {
    10.0 * (n as f64).log2() + 3.0 * 2.0 + 11.0
}

/// Sum of pair losses over all unordered pairs, computed from scratch.
pub fn total_loss(profile: Arc<EditProfile>, sequences: &[Vec<u8>]) -> Result<u64> {
    let mut total = 0;
    for a in 0..sequences.len() {
        for b in a + 1..sequences.len() {
            total += ecg::pair_loss(profile.clone(), &sequences[a], &sequences[b])? as u64;
        }
    }
    Ok(total)
}

/// Index of unordered pair `(a, b)`, `a < b`, among `m` sequences.
fn pair_index(a: usize, b: usize, m: usize) -> usize {
    debug_assert!(a < b && b < m);
    a * m - a * (a + 1) / 2 + (b - a - 1)
}

struct Growth {
    profile: Arc<EditProfile>,
    sequences: Vec<Vec<u8>>,
    states: Vec<EcgPairState>,
}

impl Growth {
    fn new(profile: Arc<EditProfile>, m: usize) -> Self {
        let pairs = m * (m - 1) / 2;
        Growth {
            states: vec![EcgPairState::new(profile.clone()); pairs],
            sequences: vec![Vec::new(); m],
            profile,
        }
    }

    fn total_loss(&self) -> u64 {
        self.states.iter().map(|s| s.pair_loss() as u64).sum()
    }

    /// Loss of sequence `s` extended by `suffix` against every sequence
    /// before it, which has already grown this round.
    fn score(&self, s: usize, suffix: &[u8]) -> Result<u64> {
        let m = self.sequences.len();
        let mut grown = Vec::with_capacity(self.sequences[s].len() + suffix.len());
        grown.extend_from_slice(&self.sequences[s]);
        grown.extend_from_slice(suffix);
        let mut total = 0;
        for p in 0..s {
            let mut trial = self.states[pair_index(p, s, m)].clone();
            trial.extend_to(&self.sequences[p], &grown, grown.len())?;
            total += trial.pair_loss() as u64;
        }
        Ok(total)
    }

    fn commit(&mut self, s: usize, suffix: &[u8]) -> Result<()> {
        let m = self.sequences.len();
        self.sequences[s].extend_from_slice(suffix);
        let n = self.sequences[s].len();
        for p in 0..s {
            self.states[pair_index(p, s, m)].extend_to(&self.sequences[p], &self.sequences[s], n)?;
        }
        Ok(())
    }

    fn into_codebook(self, config: &GenerationConfig, steps: usize, elapsed: Duration) -> Codebook {
        Codebook {
            sequences: self.sequences,
            profile: self.profile,
            correction: config.check.correction().cloned(),
            constraint: Some(config.constraint),
            meta: GenerationMeta {
                seed: config.seed,
                steps,
                candidates_per_step: config.candidates_per_step,
                elapsed: Some(elapsed),
            },
        }
    }
}

/// Grows a codebook until every pair is non-confusable.
pub fn grow_codebook(config: &GenerationConfig) -> Result<Codebook> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    pool.install(|| grow_in_pool(config))
}

fn grow_in_pool(config: &GenerationConfig) -> Result<Codebook> {
    let start = Instant::now();
    let profile = Arc::new(config.check.profile()?);
    let m = config.size;
    let mut growth = Growth::new(profile.clone(), m);
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut cache: HashMap<Vec<u8>, Vec<Vec<u8>>> = HashMap::new();
    let ctx_len = config.constraint.ctx_len;

    let mut steps = 0;
    let mut zero_since: Option<usize> = None;
    loop {
        let loss = growth.total_loss();
        if loss == 0 {
            let first = *zero_since.get_or_insert(steps);
            if steps - first >= config.min_extra_steps {
                break;
            }
        }
        if steps == config.max_steps {
            let partial = growth.into_codebook(config, steps, start.elapsed());
            return Err(Error::NonConvergence {
                steps,
                loss,
                partial: Box::new(partial),
            });
        }

        for s in 0..m {
            let seq = &growth.sequences[s];
            let ctx = seq[seq.len().saturating_sub(ctx_len)..].to_vec();
            let pool = cache
                .entry(ctx)
                .or_insert_with_key(|ctx| generate_candidates(ctx, &config.constraint));
            if pool.is_empty() {
                let tail = &growth.sequences[s][growth.sequences[s].len().saturating_sub(ctx_len)..];
                return Err(Error::InfeasibleConstraints {
                    context: String::from_utf8_lossy(tail).into_owned(),
                });
            }
            let mut sample: Vec<&Vec<u8>> = if pool.len() > config.candidates_per_step {
                index::sample(&mut rng, pool.len(), config.candidates_per_step)
                    .into_iter()
                    .map(|i| &pool[i])
                    .collect()
            } else {
                pool.iter().collect()
            };
            // ties go to the lexicographically smallest suffix
            sample.sort();

            let best = if s == 0 {
                sample[0].clone()
            } else {
                let g = &growth;
                let scores = sample
                    .par_iter()
                    .map(|cand| g.score(s, cand))
                    .collect::<Result<Vec<u64>>>()?;
                let (i, _) = scores
                    .iter()
                    .enumerate()
                    .min_by_key(|&(i, &score)| (score, i))
                    .expect("sample is non-empty");
                sample[i].clone()
            };
            growth.commit(s, &best)?;
        }
        steps += 1;
        if config.verbose {
            eprintln!(
                "step {steps} length {} total_loss {} elapsed {:.3}s",
                growth.sequences[0].len(),
                growth.total_loss(),
                start.elapsed().as_secs_f64()
            );
        }
    }

    let codebook = growth.into_codebook(config, steps, start.elapsed());
    codebook.verify()?;
    Ok(codebook)
}
