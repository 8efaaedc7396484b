from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from generators import random_ground_formula, random_ground_task, truth_table_label, ground_atom_pool
from symroute.fol import (
    InconsistentPremises,
    SaturationLimits,
    Status,
    decide,
    saturate,
    to_cnf,
    unify,
)
from symroute.fol.cnf import Literal
from symroute.fol.resolution import normalize, subsumes
from symroute.fol.unify import substitute
from symroute.ir import (
    Atom,
    Const,
    Exists,
    FolTask,
    ForAll,
    Func,
    Implies,
    Not,
    ResourceOut,
    TruthLabel,
    Var,
)
from symroute.parsers import parse_fol

a, b = Const("a"), Const("b")
x, y = Var("x"), Var("y")

TIGER = """PREMISES:
Big(tiger)
forall x. (Big(x) -> Visits(x, rabbit))
Visits(rabbit, tiger)
forall x. (Visits(x, rabbit) -> Needs(rabbit, lion))
forall x. (Sees(x, tiger) -> Rough(x))
GOAL:
~Needs(rabbit, lion)
"""


def lit(positive: bool, pred: str, *args) -> Literal:
    return Literal(positive, pred, tuple(args))


class TestUnify:
    def test_single_binding(self):
        assert unify(Atom("P", (x, b)), Atom("P", (a, b))) == {"x": a}

    def test_occurs_check(self):
        assert unify(Atom("P", (x,)), Atom("P", (Func("f", (x,)),))) is None

    def test_chained_bindings_are_resolved(self):
        s = unify(Atom("P", (x, y)), Atom("P", (y, a)))
        assert s == {"x": a, "y": a}

    def test_clash(self):
        assert unify(Atom("P", (a,)), Atom("P", (b,))) is None
        assert unify(Atom("P", (a,)), Atom("Q", (a,))) is None

    @settings(max_examples=200, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_unifier_is_idempotent_and_unifies(self, rng):
        def term(depth):
            r = rng.random()
            if depth == 0 or r < 0.4:
                return Var(rng.choice("uvwxyz")) if rng.random() < 0.6 else Const(rng.choice("abc"))
            return Func(rng.choice("fg"), tuple(term(depth - 1) for _ in range(rng.randint(1, 2))))

        s, t = term(3), term(3)
        mgu = unify(s, t)
        if mgu is None:
            return
        assert substitute(s, mgu) == substitute(t, mgu)
        assert {k: substitute(v, mgu) for k, v in mgu.items()} == mgu


class TestCnf:
    def test_universal_rule(self):
        f = ForAll("x", Implies(Atom("Big", (x,)), Atom("Visits", (x, Const("rabbit")))))
        clauses = to_cnf(f)
        assert len(clauses) == 1
        (clause,) = clauses
        assert {(l.positive, l.predicate) for l in clause} == {(False, "Big"), (True, "Visits")}
        neg = next(l for l in clause if not l.positive)
        pos = next(l for l in clause if l.positive)
        assert isinstance(neg.args[0], Var) and neg.args[0] == pos.args[0]

    def test_atom_is_already_clausal(self):
        assert to_cnf(Atom("P", (a,))) == [frozenset({lit(True, "P", a)})]

    def test_top_level_existential_becomes_constant(self):
        (clause,) = to_cnf(Exists("x", Atom("P", (x,))))
        (only,) = clause
        assert only.args == (Const("sk1"),)

    def test_existential_under_universal_becomes_function(self):
        (clause,) = to_cnf(ForAll("x", Exists("y", Atom("S", (x, y)))))
        (only,) = clause
        assert isinstance(only.args[1], Func) and only.args[1].args == (only.args[0],)

    def test_skolem_names_avoid_reserved_symbols(self):
        (clause,) = to_cnf(Exists("x", Atom("P", (x,))), reserved={"sk1"})
        assert next(iter(clause)).args == (Const("sk2"),)

    @settings(max_examples=300, deadline=None)
    @given(st.randoms(use_true_random=False))
    def test_ground_equisatisfiable(self, rng):
        atoms = rng.sample(ground_atom_pool(), rng.randint(1, 6))
        f = random_ground_formula(rng, atoms, 4)
        expected = truth_table_label(FolTask((f,), atoms[0])) is not None
        clauses = to_cnf(f)
        keys = sorted({(l.predicate, l.args) for c in clauses for l in c}, key=str)

        def satisfiable() -> bool:
            for values in itertools.product((False, True), repeat=len(keys)):
                v = dict(zip(keys, values))
                if all(any(v[(l.predicate, l.args)] == l.positive for l in c) for c in clauses):
                    return True
            return False

        assert satisfiable() == expected


class TestSaturate:
    def test_complementary_units(self):
        assert saturate([frozenset({lit(True, "P", a)}), frozenset({lit(False, "P", a)})]) is Status.UNSAT

    def test_single_unit_saturates(self):
        assert saturate([frozenset({lit(True, "P", a)})]) is Status.SATURATED

    def test_tiger_refutes_needs(self):
        task = parse_fol(TIGER)
        clauses = [c for p in task.premises for c in to_cnf(p)]
        clauses += to_cnf(Not(Atom("Needs", (Const("rabbit"), Const("lion")))))
        assert saturate(clauses) is Status.UNSAT

    def test_factoring_needed(self):
        # {P(x) | P(y)} with {~P(u) | ~P(v)} needs factoring to refute
        c1 = frozenset({lit(True, "P", x), lit(True, "P", y)})
        c2 = frozenset({lit(False, "P", Var("u")), lit(False, "P", Var("v"))})
        assert saturate([c1, c2]) is Status.UNSAT

    def test_clause_limit(self):
        # an infinite successor chain never saturates
        clauses = [frozenset({lit(True, "N", a)}),
                   frozenset({lit(False, "N", x), lit(True, "N", Func("s", (x,)))}),
                   frozenset({lit(False, "Stop", a)})]
        limits = SaturationLimits(max_clauses=50, max_seconds=10, max_term_depth=1000)
        assert saturate(clauses, limits) is Status.RESOURCE_OUT

    def test_depth_limit_reports_resource_out(self):
        clauses = [frozenset({lit(True, "N", a)}),
                   frozenset({lit(False, "N", x), lit(True, "N", Func("s", (x,)))})]
        assert saturate(clauses, SaturationLimits(max_term_depth=3)) is Status.RESOURCE_OUT

    def test_subsumption(self):
        general = normalize([lit(True, "P", x)])
        specific = normalize([lit(True, "P", a), lit(True, "Q", b)])
        assert subsumes(general, specific)
        assert not subsumes(specific, general)
        # one substitution must serve every occurrence of x
        assert not subsumes(normalize([lit(True, "S", x, x)]), normalize([lit(True, "S", a, b)]))


class TestDecide:
    def test_empty_premises_unknown(self):
        assert decide(FolTask((), Atom("P", (a,)))) is TruthLabel.UNKNOWN

    def test_identity(self):
        assert decide(FolTask((Atom("P", (a,)),), Atom("P", (a,)))) is TruthLabel.TRUE

    def test_tiger_is_false(self):
        assert decide(parse_fol(TIGER)) is TruthLabel.FALSE

    def test_syllogism_with_contrapositive(self):
        task = parse_fol("PREMISES:\nforall x. (Dumpus(x) -> ~Bright(x))\nforall x. (Vumpus(x) -> Bright(x))\n"
                         "Dumpus(sally)\nGOAL:\nVumpus(sally)")
        assert decide(task) is TruthLabel.FALSE

    def test_existential_witness(self):
        task = parse_fol("PREMISES:\nforall x. (Cat(x) -> Animal(x))\nexists x. Cat(x)\n"
                         "GOAL:\nexists y. Animal(y)")
        assert decide(task) is TruthLabel.TRUE

    def test_inconsistent_premises(self):
        task = FolTask((Atom("P", (a,)), Not(Atom("P", (a,)))), Atom("Q", (a,)))
        with pytest.raises(InconsistentPremises):
            decide(task)

    def test_limits_surface_as_resource_out(self):
        task = parse_fol("PREMISES:\nN(a)\nforall x. (N(x) -> exists y. (Succ(x, y) & N(y)))\n"
                         "GOAL:\nStop(a)")
        with pytest.raises(ResourceOut):
            decide(task, SaturationLimits(max_clauses=200, max_seconds=5, max_term_depth=12))


@settings(max_examples=300, deadline=None)
@given(st.randoms(use_true_random=False))
def test_matches_truth_table(rng: random.Random):
    task = random_ground_task(rng)
    expected = truth_table_label(task)
    if expected is None:
        with pytest.raises(InconsistentPremises):
            decide(task)
    else:
        assert decide(task) is expected


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_three_valued_coherence(rng: random.Random):
    task = random_ground_task(rng)
    if truth_table_label(task) is None:
        return
    flipped = FolTask(task.premises, Not(task.goal))
    assert decide(flipped) is decide(task).negate()


@settings(max_examples=200, deadline=None)
@given(st.randoms(use_true_random=False))
def test_subsumption_does_not_change_verdicts(rng: random.Random):
    task = random_ground_task(rng, max_atoms=6, max_premises=5)
    clauses = [c for p in task.premises for c in to_cnf(p)] + to_cnf(Not(task.goal))
    limits = SaturationLimits(max_clauses=20000, max_seconds=10, max_term_depth=12)
    with_sub = saturate(clauses, limits)
    without = saturate(clauses, limits, subsumption=False)
    if Status.RESOURCE_OUT not in (with_sub, without):
        assert with_sub is without
