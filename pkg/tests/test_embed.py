import pytest

from densecolor import (
    GuaranteeViolationError,
    HypothesisNotMetError,
    Multigraph,
    can_add_edge,
    chromatic_index,
    cycle,
    density,
    embed_k_dense,
    fixture,
    gen_fat_cycle,
    is_k_dense,
)
from densecolor.config import DEFAULT_CONFIG
from densecolor.embed import (
    _density_violation,
    _exact_max_augmentation,
    _find_exchange,
)

T2 = gen_fat_cycle(3, 2)


class TestCanAddEdge:
    def test_dense_triangle_is_saturated(self):
        # any extra edge inside the 6-dense triangle pushes the density to 7
        assert not can_add_edge(T2, 0, 1, 6)

    def test_isolated_pair_is_addable(self):
        g = Multigraph(5, T2.edges)
        assert can_add_edge(g, 3, 4, 6)
        assert density(g.with_edge(3, 4)).value <= 6

    def test_degree_cap(self):
        star = Multigraph(4, ((0, 1), (0, 2), (0, 3)))
        assert not can_add_edge(star, 0, 1, 4)  # deg(0) = 3 = k - 1 already

    def test_loop_rejected(self):
        with pytest.raises(ValueError):
            can_add_edge(T2, 1, 1, 6)

    def test_matches_full_density_recomputation(self):
        g = Multigraph(5, T2.edges + ((3, 4), (3, 4)))
        for u in range(5):
            for v in range(u + 1, 5):
                expected = (
                    g.degrees[u] < 5
                    and g.degrees[v] < 5
                    and density(g.with_edge(u, v)).value <= 6
                )
                assert can_add_edge(g, u, v, 6) == expected


class TestEmbed:
    def test_already_dense_is_untouched(self):
        g_prime, report = embed_k_dense(T2, 6)
        assert g_prime == T2
        assert report.added_edges == ()
        assert report.dense_check
        assert not report.parity_vertex_added
        assert report.chi_prime_mode == "exact"

    def test_two_isolated_vertices(self):
        g = fixture("t2-2k1")
        g_prime, report = embed_k_dense(g, 6)
        assert len(report.added_edges) == 6
        assert (report.final_n, report.final_m) == (5, 12)
        assert report.dense_check and report.chi_prime_check
        assert is_k_dense(g_prime, range(5), 6)
        assert chromatic_index(g_prime).k == 6

    def test_parity_vertex(self):
        g = fixture("t2-k1")
        g_prime, report = embed_k_dense(g, 6)
        assert report.parity_vertex_added
        assert (report.final_n, report.final_m) == (5, 12)
        assert report.dense_check

    def test_hypothesis_rejected(self):
        with pytest.raises(HypothesisNotMetError):
            embed_k_dense(cycle(5), 3)

    def test_density_premise_checked(self):
        # fat triangle with multiplicity 3 has density 9; k = 8 passes the
        # hypothesis thresholds but contradicts chi' = 8
        with pytest.raises(ValueError, match="density"):
            embed_k_dense(gen_fat_cycle(3, 3), 8)

    def test_original_ids_survive_as_prefix(self):
        g = fixture("t2-2k1")
        g_prime, _ = embed_k_dense(g, 6)
        assert g_prime.edges[: g.m] == g.edges

    def test_deterministic(self):
        g = fixture("t2-2k1")
        first = embed_k_dense(g, 6)
        second = embed_k_dense(g, 6)
        assert first == second

    def test_deficient_vertices_form_claim_structure(self):
        # on success the whole vertex set is k-dense and contains every
        # deficient vertex
        for name in ("t2-2k1", "t2-k1", "fat-c5-m4"):
            g = fixture(name)
            k = chromatic_index(g).k
            g_prime, report = embed_k_dense(g, k)
            deficient = [v for v in range(g_prime.n) if g_prime.degrees[v] < k - 1]
            assert len(deficient) <= 1 or is_k_dense(g_prime, range(g_prime.n), k)

    def test_density_never_exceeded(self):
        g = fixture("t2-2k1")
        partial = list(g.edges)
        g_prime, report = embed_k_dense(g, 6)
        for extra in g_prime.edges[g.m :]:
            partial.append(extra)
            step = Multigraph(g_prime.n, tuple(partial))
            assert density(step).value <= 6
            assert step.max_degree() <= 5


class TestExchangeMove:
    def test_recovers_from_greedy_dead_end(self):
        # five parallel (3,4) edges saturate the isolated pair; the move
        # drops one and attaches both ends to deficient triangle vertices
        added = [(3, 4)] * 5
        cur = Multigraph(5, T2.edges + tuple(added))
        move = _find_exchange(
            cur, 6, T2.edges, added, {tuple(sorted(added))}, DEFAULT_CONFIG
        )
        assert move == ((3, 4), (3, 0), (4, 1))

    def test_no_move_from_dense_graph(self):
        g_prime, _ = embed_k_dense(fixture("t2-2k1"), 6)
        added = list(g_prime.edges[6:])
        assert (
            _find_exchange(
                g_prime, 6, T2.edges, added, {tuple(sorted(added))}, DEFAULT_CONFIG
            )
            is None
        )


class TestExactFallback:
    def test_reaches_dense_count(self):
        start = Multigraph(5, T2.edges)
        adds, best_m = _exact_max_augmentation(start, 6, 24)
        assert best_m == 12
        result = Multigraph(5, T2.edges + tuple(adds))
        assert is_k_dense(result, range(5), 6)
        assert not _density_violation(result, 6)

    def test_reports_true_maximum_when_short(self):
        adds, best_m = _exact_max_augmentation(T2, 6, 14)
        assert adds == [] and best_m == 6

    def test_fallback_wiring(self, monkeypatch):
        import densecolor.embed as embed_mod
        from densecolor import RunConfig, InstanceTooLargeError

        # with both heuristics disabled the exact search does all the work
        monkeypatch.setattr(embed_mod, "_cheapest_addable_pair", lambda cur, k: None)
        monkeypatch.setattr(embed_mod, "_find_exchange", lambda *a, **kw: None)
        g = fixture("t2-2k1")
        g_prime, report = embed_k_dense(g, 6)
        assert report.dense_check and report.final_m == 12
        assert report.exchange_moves == ()
        with pytest.raises(InstanceTooLargeError):
            embed_k_dense(g, 6, RunConfig(embed_exact_max_n=3))

    def test_shortfall_emits_certificate(self, monkeypatch):
        import densecolor.embed as embed_mod

        monkeypatch.setattr(embed_mod, "_cheapest_addable_pair", lambda cur, k: None)
        monkeypatch.setattr(embed_mod, "_find_exchange", lambda *a, **kw: None)
        monkeypatch.setattr(
            embed_mod, "_exact_max_augmentation", lambda base, k, t: ([], base.m)
        )
        with pytest.raises(GuaranteeViolationError, match="saturation") as info:
            embed_k_dense(fixture("t2-2k1"), 6)
        assert info.value.certificate.startswith("p multigraph 5 6")


class TestByDensityCertification:
    def test_host_beyond_oracle_cap(self):
        # fat triangle (mult 4) plus six isolated vertices: the 12-dense
        # host needs 48 edges, past the exact chromatic-index cap, so the
        # re-check falls back to the density argument
        base = Multigraph(9, gen_fat_cycle(3, 4).edges)
        assert chromatic_index(base).k == 12
        g_prime, report = embed_k_dense(base, 12)
        assert report.chi_prime_mode == "by-density"
        assert report.chi_prime_check and report.dense_check
        assert (report.final_n, report.final_m) == (9, 48)
        assert is_k_dense(g_prime, range(9), 12)
        assert density(g_prime).value == 12
