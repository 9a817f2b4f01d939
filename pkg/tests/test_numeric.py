import time
from fractions import Fraction

import pytest

from spatialeval.generators.rng import Stream
from spatialeval.numeric.exprsafe import (
    ExprError,
    classify_partition_score,
    compile_expr,
    evaluate,
)
from spatialeval.numeric.primality import is_prime_bpsw, prime_sieve


class TestBpsw:
    def test_trivial(self):
        assert is_prime_bpsw(2)
        assert not is_prime_bpsw(1)
        assert not is_prime_bpsw(0)

    def test_base2_fermat_pseudoprime(self):
        # 341 = 11 * 31 fools a plain Fermat base-2 check.
        assert not is_prime_bpsw(341)
        assert 341 % 11 == 0  # trial-division witness

    def test_strong_base2_pseudoprimes_rejected(self):
        for n in (2047, 3277, 4033, 4681, 8321, 15841, 29341):
            assert not is_prime_bpsw(n), n

    def test_large_listed_prime(self):
        assert is_prime_bpsw(888999996969699696669666333377777711111171)

    def test_perfect_squares(self):
        for k in (10**9 + 7, 2**31 - 1, 999983):
            assert not is_prime_bpsw(k * k)

    def test_agrees_with_trial_division_below_million(self):
        sieve = prime_sieve(10**6)
        start = time.perf_counter()
        for n in range(10**6):
            assert is_prime_bpsw(n) == bool(sieve[n]), n
        assert time.perf_counter() - start < 2.0

    def test_cache_hit_path(self):
        n = 2**89 - 1  # Mersenne prime, > 64 bits so it lands in the cache
        assert is_prime_bpsw(n)
        assert is_prime_bpsw(n)


class TestCompileExpr:
    def test_template_parses_and_evaluates(self):
        fn = compile_expr("def f(x, y): return x**2 + 3*y**2 - 4*x*y - 145")
        assert fn(0, 0) == Fraction(-145)
        assert fn(2, 1) == Fraction(4 + 3 - 8 - 145)

    def test_import_rejected(self):
        with pytest.raises(ExprError):
            compile_expr("def f(x, y): return __import__('os').system('id')")

    def test_plain_expression_without_scaffold(self):
        assert compile_expr("x*y + 1")(3, 4) == 13

    def test_code_fences_stripped(self):
        fn = compile_expr("```python\ndef f(x, y): return x - y\n```")
        assert fn(7, 2) == 5

    def test_power_right_associative(self):
        assert compile_expr("2**3**2")(0, 0) == 512

    def test_unary_minus(self):
        assert compile_expr("-x + -(-y)")(3, 10) == 7

    def test_negative_exponent_rejected(self):
        with pytest.raises(ExprError):
            compile_expr("x**-2")

    def test_variable_exponent_rejected(self):
        with pytest.raises(ExprError):
            compile_expr("2**x")

    def test_float_literal_rejected(self):
        with pytest.raises(ExprError):
            compile_expr("x + 1.5")

    def test_division_exact(self):
        assert compile_expr("x/3")(1, 0) == Fraction(1, 3)

    def test_matches_independent_tree_walk(self):
        # Random ASTs rendered to text, reparsed, and compared against a
        # direct recursive evaluation of the generating tree.
        def gen(rng, depth):
            kind = rng.choice(["num", "var", "add", "sub", "mul", "pow"] if depth < 4 else ["num", "var"])
            if kind == "num":
                return ("num", Fraction(rng.randint(0, 50)))
            if kind == "var":
                return ("var", rng.choice(["x", "y"]))
            if kind == "pow":
                return ("pow", gen(rng, depth + 1), rng.randint(0, 3))
            return (kind, gen(rng, depth + 1), gen(rng, depth + 1))

        def render(node):
            k = node[0]
            if k == "num":
                return str(node[1])
            if k == "var":
                return node[1]
            if k == "pow":
                return f"({render(node[1])})**{node[2]}"
            op = {"add": "+", "sub": "-", "mul": "*"}[k]
            return f"({render(node[1])}{op}{render(node[2])})"

        def walk(node, x, y):
            k = node[0]
            if k == "num":
                return node[1]
            if k == "var":
                return x if node[1] == "x" else y
            if k == "pow":
                return walk(node[1], x, y) ** node[2]
            l, r = walk(node[1], x, y), walk(node[2], x, y)
            return {"add": l + r, "sub": l - r, "mul": l * r}[k]

        for seed in range(200):
            rng = Stream(seed, "ast")
            tree = gen(rng, 0)
            fn = compile_expr(render(tree))
            for _ in range(5):
                x, y = Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9))
                assert fn(x, y) == walk(tree, x, y), seed


class TestPartitionScore:
    def test_constant_positive_on_hash_grid(self):
        fn = compile_expr("1")
        assert classify_partition_score(fn, ["##", "##"]) == 1

    def test_constant_negative_on_hash_grid(self):
        fn = compile_expr("0 - 1")
        assert classify_partition_score(fn, ["##", "##"]) == 0

    def test_half_split(self):
        fn = compile_expr("1 - 2*y")  # y=0 row positive, y=1 row negative
        assert classify_partition_score(fn, ["##", ".."]) == 1

    def test_division_by_zero_counts_as_mismatch(self):
        fn = compile_expr("1/x")
        # x=0 column raises; both cells marked '#', so one mismatch.
        assert classify_partition_score(fn, ["##"]) == Fraction(1, 2)

    def test_positive_scaling_invariance(self):
        base = compile_expr("x*x - 3*y + 1")
        scaled = compile_expr("7*(x*x - 3*y + 1)")
        grid = ["##..", "#..#", "####"]
        assert classify_partition_score(base, grid) == classify_partition_score(scaled, grid)
