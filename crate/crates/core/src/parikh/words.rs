use super::ParikhVector;
use crate::alphabet::{Letter, Word};
use crate::error::{Error, Result};

/// `g(v) = a_1^{v_1} a_2^{v_2} ... a_m^{v_m}`, the sorted word with image `v`.
pub fn canonical_word(v: &ParikhVector) -> Word {
    rotated_block_word(v, 0)
}

/// `f(v)`: `g(v)` rotated left by one position. Over nonunary vectors `f`
/// has the prefix property.
pub fn shifted_word(v: &ParikhVector) -> Word {
    let mut w = canonical_word(v);
    if !w.is_empty() {
        w.rotate_left(1);
    }
    w
}

/// The cyclic shift of `g(v)` starting with the block of `letter`:
/// `a_t^{v_t} ... a_m^{v_m} a_1^{v_1} ... a_{t-1}^{v_{t-1}}`.
pub fn rotate_to_letter(v: &ParikhVector, letter: Letter) -> Result<Word> {
    if letter >= v.dim() {
        return Err(Error::LetterOutOfRange(letter, v.dim()));
    }
    if v.get(letter) == 0 {
        return Err(Error::Precondition(format!(
            "component {letter} of {v} is zero; rotation cannot start with that letter"
        )));
    }
    Ok(rotated_block_word(v, letter))
}

fn rotated_block_word(v: &ParikhVector, start: Letter) -> Word {
    let m = v.dim();
    let mut w = Vec::with_capacity(v.total() as usize);
    for k in 0..m {
        let t = (start + k) % m;
        w.extend(std::iter::repeat_n(t, v.get(t) as usize));
    }
    w
}
