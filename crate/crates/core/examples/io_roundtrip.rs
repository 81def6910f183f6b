use stc_core::io::{emit_instance, parse_instance};

const DOC: &str = "\
p vlmstc 4 3 2 1
e 1 2
e 2 3
e 3 4
vl 2 1
";

fn main() -> stc_core::error::Result<()> {
    let inst = parse_instance(DOC)?;
    let text = emit_instance(&inst);
    print!("{text}");
    assert_eq!(parse_instance(&text)?, inst);
    let el = inst.normalize();
    println!("edge lists: {:?}", el.psi);
    Ok(())
}
