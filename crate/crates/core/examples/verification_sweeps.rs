//! The exhaustive sweeps: routes, counts, primitivity, Hopf axioms and the
//! operator identities, with small bounds so this runs quickly.

use bellhopf::hopf::AlgebraId;
use bellhopf::render::report_text;
use bellhopf::verify;

fn main() -> bellhopf::Result<()> {
    let reports = vec![
        verify::verify_routes(5),
        verify::verify_counts(7, 5),
        verify::verify_primitivity(AlgebraId::Sym2, 4, 4),
        verify::verify_primitivity(AlgebraId::NCSF2, 4, 4),
        verify::verify_hopf(AlgebraId::WSym2, 3, 20, 7),
        verify::verify_cnk_closed(5),
        verify::verify_zassenhaus(5, 4)?,
    ];
    for r in &reports {
        print!("{}", report_text(r, 2));
    }
    Ok(())
}
