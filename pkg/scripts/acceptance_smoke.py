from __future__ import annotations

import json
import os
import sys
import tempfile
from pathlib import Path

sys.path.append(os.path.dirname(os.path.dirname(__file__)))

from app import create_app
from commands.loaders import load_eigendata
from hecke import NU0, NU1, NU2, TWO_NU2, satake_table, verify_hecke_identity
from lattices import convolve_oracle, count_chain_pattern, dl_point_count, satake_oracle, t20_t02_oracle
from levelraising import NonTemperedError, check_level_raising, det_lr_eval, det_ss_eval
from levelraising.matrices import det_lr_factorization_residual, det_ss_identity_residual

PRIMES = (2, 3)


def main() -> None:
    app = create_app()

    certificate = verify_hecke_identity()
    print("hecke identity", "passed" if certificate.passed else "FAILED")
    for p in PRIMES:
        product = convolve_oracle(NU2, NU2, p)
        triple = [product.coefficient(nu).constant_value() for nu in (TWO_NU2, NU1, NU0)]
        print(f"c_nu2 * c_nu2 at p={p}:", triple)

    for p in PRIMES:
        for mu in (NU0, NU2, NU1, TWO_NU2):
            matches = satake_oracle(mu, p) == satake_table(mu).reduce_at_prime(p)
            print(f"satake oracle {mu} at p={p}:", "matches" if matches else "DIFFERS")

    for p in PRIMES:
        cases = [count_chain_pattern("type2-between-type0-pairs", p, case) for case in (0, 2, 4)]
        print(f"type-2 lattices between type-0 pairs at p={p}:", cases)
        print(f"T20 o T02 at p={p}:", t20_t02_oracle(p).render())

    for p in (2, 3, 5):
        counts = {name: count_chain_pattern(name, p) for name in ("kl-index", "sie-index", "lines-in-2-space")}
        print(f"index counts at p={p}:", counts)
        print(f"surface points over F_{p}:", dl_point_count(p, 1))

    print("det_lr factorization residual:", det_lr_factorization_residual())
    print("det_ss identity residual:", det_ss_identity_residual())

    with app.app_context(), tempfile.TemporaryDirectory() as workdir:
        path = Path(workdir) / "eigens.json"
        path.write_text(json.dumps([
            {"label": "golden", "p": 2, "a1": 47, "a2": 19},
            {"label": "ordinary", "p": 2, "a1": 30, "a2": 15},
        ]))
        for e in load_eigendata(path):
            try:
                report = check_level_raising(e, 5)
            except NonTemperedError as exc:
                print(e.label, "rejected:", exc)
                continue
            print(
                e.label,
                "special" if report.special else "not special",
                f"u={report.u} depth={report.depth}",
                f"det_lr={det_lr_eval(e, 5).to_dict()}",
                f"det_ss={det_ss_eval(e, 5).to_dict()}",
            )


if __name__ == "__main__":
    main()
