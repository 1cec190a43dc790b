use crate::error::Result;
use crate::explore::enumerate::continuous_partial_maps;
use crate::lattice::{sup0_partial, TaggedFamily};
use crate::reduce::Reducer;
use crate::topo::{PartialMap, Problem};

/// `↑g↑` over every continuous partial map `Y → X`.
pub fn continuous_supremum(y_to_x: &PartialMap, cap: usize) -> Result<PartialMap> {
    let maps = continuous_partial_maps(y_to_x.dom(), y_to_x.cod(), cap)?;
    sup0_partial(y_to_x.cod(), &TaggedFamily::indexed(maps))
}

/// `f :⊆ Y → X` is admissible when it is `≤₀`-equivalent to the supremum
/// of all continuous partial maps `Y → X`.
pub fn admissible(f: &PartialMap, reducer: &Reducer, cap: usize) -> Result<bool> {
    let sup = continuous_supremum(f, cap)?;
    let (pf, ps) = (Problem::singleton(f), Problem::singleton(&sup));
    Ok(reducer.le0_problem(&pf, &ps)?.is_some() && reducer.le0_problem(&ps, &pf)?.is_some())
}

/// The quantifier form: `f` is continuous and every continuous partial map
/// `Y → X` reduces to it.
pub fn admissible_by_quantifier(f: &PartialMap, reducer: &Reducer, cap: usize) -> Result<bool> {
    if !f.is_continuous() {
        return Ok(false);
    }
    let target = Problem::singleton(f);
    for rho in continuous_partial_maps(f.dom(), f.cod(), cap)? {
        if reducer.le0_problem(&Problem::singleton(&rho), &target)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}
