//! Combinatorial kernel: Littlewood–Richardson coefficients, Cauchy
//! expansions, restriction and tensor rules for orthogonal groups.

pub mod cauchy;
pub mod lr;
pub mod restrict;

pub use cauchy::{gl_dim, skew_cauchy, sym_cauchy};
pub use lr::{lr_cache, lr_coeff, lr_pairs, lr_product, lr_skew};
/// Empties the LR cache and every derived memo.
pub fn clear_all_caches() {
    lr_cache().clear();
    clear_memos();
}

pub use restrict::{
    branch_mult, clear_memos, even_row_content, littlewood_restrict, newell_littlewood, restrict_gl,
    stable_o_branch, stable_o_branch_ext, tensor, tensor_via_gl,
};
