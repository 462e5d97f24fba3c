//! Rayon-backed versions of corpus-wide operations. Results are identical
//! to the serial versions in `spurious-core`.

use rayon::prelude::*;
use spurious_core::corpus::{Corpus, Vocabulary};
use spurious_core::noiser::{inject, NoiseSpec};

pub fn corrupt_corpus_par(c: &Corpus, spec: &NoiseSpec, vocab: &Vocabulary) -> spurious_core::Result<Corpus> {
    let docs = c
        .docs()
        .par_iter()
        .map(|d| inject(d, spec, vocab))
        .collect::<spurious_core::Result<Vec<_>>>()?;
    Corpus::new(docs)
}
