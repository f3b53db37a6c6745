//! Resumable semideciders and fair interleaving.

/// Where a semidecider stands after a step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemiState<W> {
    Running,
    Halted(W),
}

impl<W> SemiState<W> {
    pub fn is_halted(&self) -> bool {
        matches!(self, SemiState::Halted(_))
    }
}

/// A procedure that halts exactly on its yes-instances, exposed one step at
/// a time so that several can share a schedule. `step` is total; once
/// halted, further steps return the same answer without doing work.
pub trait Semidecider {
    type Witness: Clone;

    fn step(&mut self) -> SemiState<Self::Witness>;

    /// Steps that did work.
    fn steps(&self) -> u64;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Race<A, B> {
    First(A),
    Second(B),
    Exhausted,
}

/// Strict alternation, one step each, starting with `first`. `limit` caps
/// the combined number of steps.
pub(crate) fn dovetail<A: Semidecider, B: Semidecider>(
    first: &mut A,
    second: &mut B,
    limit: Option<u64>,
) -> (Race<A::Witness, B::Witness>, u64) {
    let mut taken = 0u64;
    loop {
        if limit.is_some_and(|l| taken >= l) {
            return (Race::Exhausted, taken);
        }
        taken += 1;
        if let SemiState::Halted(w) = first.step() {
            return (Race::First(w), taken);
        }
        if limit.is_some_and(|l| taken >= l) {
            return (Race::Exhausted, taken);
        }
        taken += 1;
        if let SemiState::Halted(w) = second.step() {
            return (Race::Second(w), taken);
        }
    }
}

/// Runs `loser` for up to `extra` more steps; true if it halts too.
pub(crate) fn also_halts<S: Semidecider>(loser: &mut S, extra: u64) -> bool {
    (0..extra).any(|_| loser.step().is_halted())
}
