//! Solution sinks. Enumerators emit each solution as a sorted id slice
//! (vertex ids in vertex mode, edge ids otherwise) and stop early when a
//! sink answers `Break`.

use std::collections::{HashSet, VecDeque};
use std::ops::ControlFlow;

pub trait Sink {
    fn emit(&mut self, solution: &[u32]) -> ControlFlow<()>;

    /// Flush buffered output; called once after the enumeration finishes.
    fn finish(&mut self) {}
}

/// Counts solutions without materializing them.
#[derive(Default)]
pub struct CountSink {
    pub count: u64,
}

impl Sink for CountSink {
    fn emit(&mut self, _solution: &[u32]) -> ControlFlow<()> {
        self.count += 1;
        ControlFlow::Continue(())
    }
}

/// Collects canonical solutions, tracking duplicates separately so tests can
/// assert duplicate-freedom.
#[derive(Default)]
pub struct CollectSink {
    pub set: HashSet<Vec<u32>>,
    pub emitted: u64,
    pub duplicates: u64,
}

impl CollectSink {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Sink for CollectSink {
    fn emit(&mut self, solution: &[u32]) -> ControlFlow<()> {
        self.emitted += 1;
        if !self.set.insert(solution.to_vec()) {
            self.duplicates += 1;
        }
        ControlFlow::Continue(())
    }
}

/// Adapter for closures.
pub struct FnSink<F: FnMut(&[u32]) -> ControlFlow<()>>(pub F);

impl<F: FnMut(&[u32]) -> ControlFlow<()>> Sink for FnSink<F> {
    fn emit(&mut self, solution: &[u32]) -> ControlFlow<()> {
        (self.0)(solution)
    }
}

/// Stops the enumeration after `limit` solutions (0 keeps it unlimited).
pub struct CapSink<S: Sink> {
    pub inner: S,
    limit: u64,
    seen: u64,
}

impl<S: Sink> CapSink<S> {
    pub fn new(inner: S, limit: u64) -> Self {
        CapSink {
            inner,
            limit,
            seen: 0,
        }
    }
}

impl<S: Sink> Sink for CapSink<S> {
    fn emit(&mut self, solution: &[u32]) -> ControlFlow<()> {
        self.inner.emit(solution)?;
        self.seen += 1;
        if self.limit != 0 && self.seen >= self.limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }

    fn finish(&mut self) {
        self.inner.finish();
    }
}

/// Bounded-queue delay regularizer: solutions are buffered and released one
/// per emission once the queue fills, which evens out bursts; the tail drains
/// on `finish`. Order is preserved.
pub struct OutputQueue<S: Sink> {
    pub inner: S,
    queue: VecDeque<Vec<u32>>,
    capacity: usize,
}

impl<S: Sink> OutputQueue<S> {
    pub fn new(inner: S, capacity: usize) -> Self {
        OutputQueue {
            inner,
            queue: VecDeque::with_capacity(capacity.max(1)),
            capacity: capacity.max(1),
        }
    }
}

impl<S: Sink> Sink for OutputQueue<S> {
    fn emit(&mut self, solution: &[u32]) -> ControlFlow<()> {
        self.queue.push_back(solution.to_vec());
        if self.queue.len() >= self.capacity {
            let front = self.queue.pop_front().unwrap();
            return self.inner.emit(&front);
        }
        ControlFlow::Continue(())
    }

    fn finish(&mut self) {
        while let Some(front) = self.queue.pop_front() {
            if self.inner.emit(&front).is_break() {
                break;
            }
        }
        self.inner.finish();
    }
}
