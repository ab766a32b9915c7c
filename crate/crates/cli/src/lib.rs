//! Command-line front end pieces: generator-spec parsing, run plumbing for
//! count/enum/verify, the benchmark harness, and the naive baseline
//! enumerator used for contrast in benchmarks.

pub mod bench;
pub mod family;
pub mod naive;
pub mod run;

/// Runs an enumeration closure on a thread with a large stack. Exclusion
/// chains recurse once per deleted element, so deep instances need more than
/// the default main-thread stack.
pub fn with_big_stack<T, F>(f: F) -> T
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    std::thread::scope(|scope| {
        std::thread::Builder::new()
            .stack_size(512 << 20)
            .name("enumeration".into())
            .spawn_scoped(scope, f)
            .expect("spawn enumeration thread")
            .join()
            .expect("enumeration thread panicked")
    })
}
