//! Runs the acceptance suite from the library and prints one line per criterion.

use shifted_hyp::cli::suite::run_suite;

fn main() {
    let (rep, times) = run_suite(1);
    for (c, t) in rep.criteria.iter().zip(times) {
        println!("{:>2} {} {:<40} {:>7.2} s", c.id, if c.pass { "pass" } else { "FAIL" }, c.title, t.as_secs_f64());
        for k in c.failing() {
            println!("       {}: {}", k.name, k.detail);
        }
    }
}
