"""Every verification, wired into a :class:`VerificationReport`."""

from __future__ import annotations

from . import autgroup, field, goursat, jmap
from .data import CONDUCTOR_CURVES
from .report import Config, VerificationReport, cited, run_check, skipped
from .weierstrass import phi2_coefficients

SLOW_ROWS = (6, -6)


def _table_checks(report: VerificationReport, config: Config, skip_slow: bool) -> None:
    loc = "table of j at [n]P"
    holder = {}

    def orientation():
        G = jmap.resolve_table_orientation()
        holder["G"] = G
        return True, f"row labels refer to multiples of {G}"

    report.add(run_check("table/orientation", loc, orientation))
    for n in range(-6, 7):
        cid = f"table/row{n:+d}" if n else "table/row+0"
        if skip_slow and n in SLOW_ROWS:
            report.add(skipped(cid, loc, "slow row skipped"))
            continue

        def row_check(n=n):
            G = holder.get("G") or jmap.resolve_table_orientation()
            row = jmap.build_row(n, G, config.bound, config.precision)
            problems = jmap.compare_row(row)
            witness = f"j = {row.j_factored()}; CM {row.cm_disc}; K {row.k_label() or '-'}"
            return not problems, witness if not problems else witness + "; " + "; ".join(problems)

        report.add(run_check(cid, loc, row_check))


def _dict_check(d: dict, *keys: str) -> tuple[bool, str]:
    return d["ok"], ", ".join(f"{k}={d[k]}" for k in keys)


def build_report(config: Config | None = None, skip_slow: bool = False) -> VerificationReport:
    config = config or Config()
    report = VerificationReport()
    add = report.add

    _table_checks(report, config, skip_slow)

    loc = "defining equations of X_ns(11)"

    def lam():
        value = jmap.lambda_determination()
        return value == -1, f"lambda = {value}; j(Q) = 1728, F(Q) = 121/4"

    add(run_check("equations/lambda", loc, lam))
    add(run_check("equations/trace-norm-multiplicity", loc,
                  lambda: _dict_check(jmap.trace_norm_multiplicity_check(), "trace_multiplicity", "norm_multiplicity")))
    add(run_check("equations/ramification-genus", loc,
                  lambda: _dict_check(field.ramification_certificate(), "gcd", "disc_F", "branch_points", "genus")))
    add(run_check("equations/translation", "the j-map as a composition",
                  lambda: _dict_check(jmap.verify_translation_composition(), "matched", "spot_point")))
    add(run_check("equations/rho-covers-negation", loc,
                  lambda: _dict_check(jmap.symmetry_certificate(), "rho_covers_negation", "neg_P")))

    loc = "involutions of X_ns(11)"

    def preserve():
        bad = [s.name for s in field.KLEIN_FOUR if not s.preserves_relations()]
        return not bad, "id, w, rho, w*rho preserve both relations" if not bad else f"broken: {bad}"

    def table():
        t = field.klein_four_table()
        return field.is_klein_four(t), f"w*rho = {t[('w', 'rho')]}, rho*w = {t[('rho', 'w')]}"

    add(run_check("involutions/preserve-relations", loc, preserve))
    add(run_check("involutions/klein-four-table", loc, table))

    loc = "regular differentials and elliptic quotients"

    def quotients():
        bad = [q.name for q in field.QUOTIENT_MAPS.values() if not q.images_on_target()]
        return not bad, "phi_B, phi_H, phi_C land on their targets" if not bad else f"broken: {bad}"

    def c_model():
        E, iso = field.c_model()
        return iso is not None, f"{E} ~ C via {iso}"

    def actions():
        t = autgroup.action_table()
        ok = all(m.is_signed_diagonal() for m in t.values()) and autgroup.is_homomorphism(t) and autgroup.is_faithful(t)
        return ok, "; ".join(f"{k}: diag{tuple(int(e) for e in m.diag)}" for k, m in t.items())

    add(run_check("differentials/quotient-maps", loc, quotients))
    add(run_check("differentials/c-model", loc, c_model))
    add(run_check("differentials/action-matrices", loc, actions))
    add(run_check("differentials/xy-relation", loc,
                  lambda: _dict_check(autgroup.verify_xy_relation(), "x_is_3X-1", "y_is_2Y+1", "relation")))

    loc = "Goursat maps from H"
    holder = {}

    def params():
        if "p" not in holder:
            holder["p"] = goursat.substitute_and_match()
        return holder["p"]

    def constants():
        cmp = goursat.compare_with_printed(params())
        bad = [k for k, (_, _, eq) in cmp.items() if not eq]
        witness = ", ".join(f"{k}={d}" for k, (d, _, _) in cmp.items())
        if bad:
            witness += "; differs from printed: " + ", ".join(f"{k} printed {cmp[k][1]}" for k in bad)
        return not bad, witness

    def identities():
        maps = (goursat.build_map_one(params()), goursat.build_map_two(params()))
        return all(m.is_valid() for m in maps), "t v^2 = cubic(u) holds identically for both maps"

    def degrees():
        ds = [goursat.map_degree(m) for m in (goursat.build_map_one(params()), goursat.build_map_two(params()))]
        return ds == [3, 3], f"degrees {ds}"

    def shapes():
        s = [goursat.ratio_shape(goursat.pullback_ratio(m)) for m in (goursat.build_map_one(params()), goursat.build_map_two(params()))]
        ok = [k for k, _ in s] == ["constant", "constant*x"] and all(c != 0 for _, c in s)
        return ok, f"{s[0][0]} {s[0][1]}, {s[1][0]} {s[1][1]}"

    def targets():
        a, d = goursat.identify_targets(params())
        return True, f"to A via {a}; to D via {d}"

    def chain():
        k1, k2 = goursat.chain_constants(params())
        return k1 != 0 and k2 != 0, f"pull-backs {k1} omega_A and {k2} omega_D"

    add(run_check("goursat/printed-constants", loc, constants))
    add(run_check("goursat/map-identities", loc, identities))
    add(run_check("goursat/degrees", loc, degrees))
    add(run_check("goursat/pullback-shapes", loc, shapes))
    add(run_check("goursat/targets", loc, targets))
    add(run_check("goursat/chain-pullbacks", loc, chain))
    add(run_check("goursat/sextic-squarefree", loc, lambda: (goursat.sextic_is_squarefree(params()), "no repeated roots")))

    def congruence():
        c = goursat.congruence_check(config.p_max)
        return c["ok"], f"{len(c['rows'])} good primes <= {config.p_max}, skipped {c['skipped']}, failures {c['failures']}"

    add(run_check("congruence/mod3", "congruence of A and D", congruence))

    loc = "automorphism group"
    obs = {}

    def obstructions():
        if not obs:
            obs.update(autgroup.obstruction_checks())
        return obs

    def phi2_valid():
        phi2_coefficients()
        return True, "Phi_2(0, y) = (y - 54000)^3"

    add(run_check("obstructions/ratio-not-square", loc,
                  lambda: (obstructions()["ratio_not_square"], "847/27 not a square in Q(sqrt(-11))")))
    add(run_check("obstructions/integrality", loc,
                  lambda: (obstructions()["only_D_nonintegral"], f"j = {obstructions()['j']}")))
    add(run_check("obstructions/B-cm", loc,
                  lambda: (obstructions()["B_has_CM_-11"], f"j(B) = {CONDUCTOR_CURVES['B'].j} = CM j for -11")))
    add(run_check("obstructions/phi2-validated", loc, phi2_valid))
    add(run_check("obstructions/A-C-phi2", loc,
                  lambda: (obstructions()["A_C_2_isogenous"], f"Phi_2(j(A), j(C)) = {obstructions()['phi2_A_C']}")))
    add(run_check("obstructions/A-C-twist", loc,
                  lambda: (obstructions()["A_C_twist_isogenous"], "a_p(A) = (-11/p) a_p(C) for good p <= 100")))

    def conclusion():
        c = autgroup.automorphism_group_conclusion()
        failed = [ln["step"] for ln in c["lines"] if ln["status"] == "failed"]
        witness = f"automorphisms {c['automorphisms']}"
        return c["ok"], witness if not failed else witness + f"; failed steps: {failed}"

    add(run_check("automorphisms/conclusion", loc, conclusion))

    add(cited("cited/non-cm-K", "table of j at [n]P",
              "K for non-CM rows comes from mod-11 Galois representations; shown, not recomputed"))
    add(cited("cited/chen-isogeny", "regular differentials and elliptic quotients",
              "J_ns(11) isogenous to the new part of J_0(121)"))
    add(cited("cited/mordell-weil", "table of j at [n]P", "X_ns^+(11)(Q) is infinite cyclic, generated by P"))
    try:
        degree = f"; computed deg Norm(j) = {jmap.j_degree()}"
    except Exception as exc:
        degree = f"; degree computation failed: {exc}"
    add(cited("cited/j-degree-55", "defining equations of X_ns(11)", "j has degree 55 on X_ns^+(11)" + degree))
    return report
