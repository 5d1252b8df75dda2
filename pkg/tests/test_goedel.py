# -*- coding: utf-8 -*-
import json

import pytest

from conftest import random_coded
from gap_logic.errors import CodecError, ModelError, SelfCheckError, UnexpressibleError
from gap_logic.goedel import (
    ALPHABET,
    BASE,
    DIAG_TERM,
    PRF_TERM,
    ToySystem,
    build_fixed_point,
    decode,
    decode_formula,
    default_sample,
    diag,
    diagonal_formula,
    encode,
    eval_G_unrolled,
    eval_H,
    eval_instance_K,
    eval_J,
    formula_tokens,
    goedel_number,
    parse_tokens,
)
from gap_logic.prop3 import TruthValue3
from gap_logic.syntax import Implies, Numeral, Pred, parse_formula, substitute

T, F, N = TruthValue3.T, TruthValue3.F, TruthValue3.N

LEAF_A = parse_formula("Diag(1, 2)")
LEAF_B = parse_formula("Prf(3, 4)")


@pytest.fixture
def system():
    return ToySystem.default()


@pytest.fixture
def fixed_point(system):
    return build_fixed_point(system)


class TestCodec:

    def test_alphabet(self):
        assert BASE == 17 == len(set(ALPHABET))

    def test_small_numbers(self):
        assert encode(["~"]) == 1
        assert encode(["->"]) == 17
        assert encode(["~", "~"]) == 18
        assert encode(["~", "&"]) == 19
        assert decode(18) == ["~", "~"]
        assert decode(17) == ["->"]

    @pytest.mark.parametrize("tokens", [[], ["forall"], ["~", "P"]])
    def test_encode_errors(self, tokens):
        with pytest.raises(CodecError):
            encode(tokens)

    @pytest.mark.parametrize("n", [0, -3, True, 2.0])
    def test_decode_errors(self, n):
        with pytest.raises(CodecError):
            decode(n)

    def test_bijective_on_numbers(self, rng):
        for n in range(1, 10_000):
            assert encode(decode(n)) == n
        for _ in range(10_000):
            n = rng.randint(1, 2 ** 64)
            assert encode(decode(n)) == n

    def test_bijective_on_sequences(self, rng):
        for _ in range(10_000):
            tokens = [rng.choice(ALPHABET) for _ in range(rng.randint(1, 64))]
            assert decode(encode(tokens)) == tokens

    def test_formula_round_trip_and_injectivity(self, rng):
        seen = {}
        for _ in range(3000):
            f = random_coded(rng, 4)
            n = goedel_number(f)
            assert decode_formula(n) == f
            assert parse_tokens(formula_tokens(f)) == f
            assert seen.setdefault(n, f) == f

    def test_token_rendering(self):
        f = parse_formula("exists x. (Prf(x, 2) -> ~Diag(0, x))")
        assert " ".join(formula_tokens(f)) == "exists x . ( Prf ( x , # d1 d0 ) -> ~ Diag ( # d0 , x ) )"

    def test_non_formulas_decode_to_none(self):
        assert decode_formula(1) is None
        padded = encode(["Diag", "(", "#", "d0", "d1", ",", "x", ")"])
        assert decode_formula(padded) is None

    @pytest.mark.parametrize("text", ["F(x)", "P", "forall x. Prf(x, 1)", "exists w. Prf(w, 1)", "Prf(1, 2) | Prf(2, 1)"])
    def test_unexpressible(self, text):
        with pytest.raises(UnexpressibleError):
            goedel_number(parse_formula(text))


class TestDiag:

    def test_substitutes_own_number(self):
        u = diagonal_formula()
        k = goedel_number(u)
        assert diag(k) == goedel_number(substitute(u, "y", Numeral(k)))

    def test_undefined(self):
        assert diag(0) is None
        assert diag(1) is None
        assert diag(goedel_number(LEAF_A)) is None
        assert diag(goedel_number(parse_formula("Prf(x, y)"))) is None

    def test_self_application(self):
        for text in ("Diag(y, y)", "exists x. Prf(x, y)"):
            f = parse_formula(text)
            m = goedel_number(f)
            assert diag(m) == goedel_number(substitute(f, "y", Numeral(m)))
        m = goedel_number(parse_formula("Diag(y, y)"))
        assert diag(m) == goedel_number(Pred("Diag", (Numeral(m), Numeral(m))))


class TestToySystem:

    def test_default_closure(self, system):
        assert len(system.closure) == 5
        assert system.is_theorem(parse_formula("Prf(1, 1)"))
        assert not system.is_theorem(parse_formula("Prf(1, 0)"))
        assert len(system.proofs[parse_formula("Prf(0, 1)")]) == 3

    def test_modus_ponens(self):
        imp = Implies(LEAF_A, LEAF_B)
        assert ToySystem([LEAF_A, imp]).closure == {LEAF_A, imp, LEAF_B}
        assert ToySystem([imp]).closure == {imp}

    def test_witnesses_are_sound(self, system):
        for f in system.closure:
            z = goedel_number(f)
            witness = system.prf_witness(z)
            assert witness is not None
            assert system.check_proof(witness, z)

    def test_non_members(self, system):
        outsider = parse_formula("Prf(1, 0)")
        z = goedel_number(outsider)
        assert system.prf_witness(z) is None
        assert system.prf_witness(1) is None
        assert not system.check_proof(system.encode_proof([outsider]), z)
        assert not system.check_proof(1, z)

    def test_random_non_members(self, system, rng):
        for _ in range(1000):
            f = random_coded(rng, 3)
            if f not in system.closure:
                assert system.prf_witness(goedel_number(f)) is None
            n = rng.randint(1, 2 ** 40)
            if n not in system.closure_codes:
                assert system.prf_witness(n) is None

    def test_invalid_systems(self, tmp_path):
        with pytest.raises(ModelError):
            ToySystem([])
        with pytest.raises(ModelError):
            ToySystem([parse_formula("Prf(x, 1)")])
        with pytest.raises(UnexpressibleError):
            ToySystem([parse_formula("P")])
        with pytest.raises(ModelError):
            ToySystem.from_json({"axioms": "Diag(0, 0)"})
        with pytest.raises(ModelError):
            ToySystem.load(tmp_path / "missing.json")

    def test_load(self, tmp_path):
        path = tmp_path / "mini.json"
        path.write_text(json.dumps({"axioms": ["Diag(1, 2)"]}), encoding="utf-8")
        loaded = ToySystem.load(path)
        assert loaded.name == "mini"
        assert loaded.closure == {LEAF_A}
        assert ToySystem.load("default.json").closure == ToySystem.default().closure


class TestFixedPoint:

    def test_construction(self, system, fixed_point):
        assert diag(fixed_point.k) == fixed_point.gnum_G
        assert not fixed_point.g_provable
        assert not system.is_theorem(fixed_point.G)
        assert set(fixed_point.to_dict()) == {"k", "gnum_G", "g_provable"}

    def test_self_check(self, system, monkeypatch):
        monkeypatch.setattr("gap_logic.goedel.fixed_point.diag", lambda y: None)
        with pytest.raises(SelfCheckError):
            build_fixed_point(system)

    def test_instances(self, system, fixed_point):
        decisive = eval_instance_K(fixed_point.gnum_G, fixed_point, system)
        assert decisive.verdict is N
        assert decisive.classical is T
        assert decisive.empty_terms == (PRF_TERM,)
        other = eval_instance_K(1, fixed_point, system)
        assert other.empty_terms == (PRF_TERM, DIAG_TERM)
        theorem = eval_instance_K(system.closure_codes[0], fixed_point, system)
        assert theorem.verdict is N
        assert theorem.empty_terms == (DIAG_TERM,)

    def test_sample(self, system, fixed_point):
        sample = default_sample(fixed_point, system, max_n=4)
        assert sample[:4] == [1, 2, 3, 4]
        assert fixed_point.gnum_G in sample
        assert set(system.closure_codes) <= set(sample)

    def test_every_sampled_instance_is_vacuous(self, system, fixed_point):
        report = eval_G_unrolled(fixed_point, system)
        assert len(report.instances) == len(default_sample(fixed_point, system))
        for instance in report.instances:
            assert instance.verdict is N
            assert len(instance.empty_terms) == len(instance.directions) >= 1
            assert (DIAG_TERM in instance.empty_terms) is (instance.n != fixed_point.gnum_G)
            assert (PRF_TERM in instance.empty_terms) is (instance.n not in system.closure_codes)

    def test_unrolled(self, system, fixed_point):
        report = eval_G_unrolled(fixed_point, system, sample=[3, 1, 2])
        assert [r.n for r in report.instances] == [1, 2, 3]
        assert report.overall.value is N
        assert all(r.verdict is N for r in report.instances)
        assert report.as_written is T
        assert report.x_first is N

    def test_h_and_j(self, system, fixed_point):
        assert eval_H(fixed_point, system) is T
        verdict = eval_J(fixed_point, system)
        assert verdict.value is N
        assert verdict.note == "equivalence fails"
        assert verdict.witness == {"G": "N", "H": "T"}
        classical = eval_J(fixed_point, system, semantics="classical")
        assert classical.value is T
        assert classical.note == "equivalence holds"
        with pytest.raises(ValueError):
            eval_J(fixed_point, system, semantics="intuitionistic")

    def test_other_instances_come_from_a_real_instance(self, system, fixed_point, monkeypatch):
        monkeypatch.setattr("gap_logic.goedel.fixed_point.diag_holds", lambda k, n: True)
        report = eval_G_unrolled(fixed_point, system, sample=())
        assert report.overall.value is F
        assert report.overall.note == f"K_{system.closure_codes[0]} ist falsch"

    def test_provable_g_makes_decisive_instance_false(self, fixed_point):
        strong = ToySystem([fixed_point.G], name="strong")
        fp = build_fixed_point(strong)
        assert fp.g_provable
        assert eval_instance_K(fp.gnum_G, fp, strong).verdict is F
        assert eval_instance_K(fp.gnum_G, fp, strong).classical is F
        report = eval_G_unrolled(fp, strong, sample=())
        assert report.overall.value is F
        assert report.as_written is F
        assert eval_H(fp, strong) is F
