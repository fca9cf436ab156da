use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(dihedral_intersection::cli::run() as u8)
}
