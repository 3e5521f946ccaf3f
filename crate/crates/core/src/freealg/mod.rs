//! Free associative algebras over the rationals with a weighted grading:
//! words, graded-lex orders, polynomials, normal forms and Gröbner bases.

mod groebner;
mod normal_words;
mod overlap;
mod poly;
mod relations;
mod word;

pub use groebner::{complete, inter_reduce, is_groebner, Completion, CompletionStatus, GroebnerCertificate, GroebnerWitness};
pub use normal_words::{normal_word_counts, normal_words};
pub use overlap::{overlaps, Composition, SElement};
pub use poly::{FreePoly, PolyDisplay};
pub use relations::{Relation, RelationSet, Strategy};
pub use word::{Generator, WeightedOrder, Word};

pub(crate) use poly::write_terms;
