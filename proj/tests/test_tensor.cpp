#include "doctest.h"

#include "g1/tensor.hpp"

using namespace g1;

namespace {

RationalTensor basis_tensor(const std::vector<int>& shape,
                            const std::vector<int>& idx) {
  RationalTensor t(shape);
  t.at(idx) = Rat(1);
  return t;
}

RationalTensor pseudo_random(const std::vector<int>& shape, long seed) {
  RationalTensor t(shape);
  for (auto& e : t.entries) {
    seed = (seed * 1103515245 + 12345) % (1L << 31);
    e = Rat(seed % 21 - 10);
  }
  return t;
}

}  // namespace

TEST_CASE("slice picks out sub-tensors") {
  RationalTensor h = basis_tensor({2, 2, 2, 2}, {0, 0, 0, 0});
  RationalTensor a1 = slice(h, 0, 0);
  CHECK(a1.shape == std::vector<int>{2, 2, 2});
  CHECK(a1.at({0, 0, 0}) == 1);
  CHECK(slice(h, 0, 1).is_zero());

  RationalTensor b = basis_tensor({3, 3, 3}, {0, 1, 2});  // b_{123} = 1
  RationalTensor m = slice(b, 1, 1);
  CHECK(m.shape == std::vector<int>{3, 3});
  CHECK(m.at({0, 2}) == 1);
  Rat total(0);
  for (const auto& e : m.entries) total += e;
  CHECK(total == 1);

  CHECK_THROWS_AS(slice(h, 4, 0), IndexOutOfRange);
  CHECK_THROWS_AS(slice(h, 0, 2), IndexOutOfRange);
}

TEST_CASE("act: identity, commutation, slice swap") {
  RationalTensor t = pseudo_random({2, 2, 2, 2}, 7);
  Mat id = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  CHECK(act(t, 2, id) == t);

  Mat g1 = {{Rat(2), Rat(1)}, {Rat(1), Rat(1)}};
  Mat g2 = {{Rat(0), Rat(1)}, {Rat(-1), Rat(3)}};
  CHECK(act(act(t, 0, g1), 2, g2) == act(act(t, 2, g2), 0, g1));

  Mat swap = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
  RationalTensor s = act(t, 0, swap);
  CHECK(slice(s, 0, 0) == slice(t, 0, 1));
  CHECK(slice(s, 0, 1) == slice(t, 0, 0));

  // New slice i = sum_j g[i][j] * old slice j: row [[r,s],[t,u]] convention.
  Mat g = {{Rat(3), Rat(5)}, {Rat(0), Rat(1)}};
  RationalTensor u = act(t, 1, g);
  CHECK(u.at({0, 0, 1, 1}) == 3 * t.at({0, 0, 1, 1}) + 5 * t.at({0, 1, 1, 1}));

  CHECK_THROWS_AS(act(t, 0, Mat{{Rat(1)}}), ShapeMismatch);
}

TEST_CASE("symmetry_check") {
  RationalTensor t({2, 2});
  t.at({0, 1}) = Rat(1);
  CHECK(symmetry_check(t, {0, 1}));
  CHECK(!symmetry_check(t, {1, 0}));
  t.at({1, 0}) = Rat(1);
  CHECK(symmetry_check(t, {1, 0}));
  RationalTensor r({2, 3});
  CHECK_THROWS_AS(symmetry_check(r, {1, 0}), ShapeMismatch);
  CHECK_THROWS_AS(symmetry_check(r, {0, 0}), ShapeMismatch);
}

TEST_CASE("sym_embed: binary quartic") {
  // x^4 + y^4: only the all-1 and all-2 corners.
  RationalTensor t = sym_embed_quartic({Rat(1), Rat(0), Rat(0), Rat(0), Rat(1)});
  CHECK(t.at({0, 0, 0, 0}) == 1);
  CHECK(t.at({1, 1, 1, 1}) == 1);
  Rat total(0);
  for (const auto& e : t.entries) total += e;
  CHECK(total == 2);

  // x^4 + 4x^3y: divided entry b = 1 at every index with one 2.
  RationalTensor u = sym_embed_quartic({Rat(1), Rat(4), Rat(0), Rat(0), Rat(0)});
  CHECK(u.at({0, 0, 0, 0}) == 1);
  CHECK(u.at({0, 0, 0, 1}) == 1);
  CHECK(u.at({0, 1, 0, 0}) == 1);
  CHECK(u.at({1, 1, 0, 0}) == 0);

  // Division by the binomial weights is rational: coefficient 1 on x^2y^2.
  RationalTensor v = sym_embed_quartic({Rat(0), Rat(0), Rat(1), Rat(0), Rat(0)});
  CHECK(v.at({0, 0, 1, 1}) == make_rat(1, 6));

  // Full symmetry holds, and readout inverts the embedding.
  RationalTensor w =
      sym_embed_quartic({make_rat(2, 3), Rat(5), Rat(-1), Rat(7), Rat(11)});
  CHECK(w.tag_consistent());
  CHECK(symmetry_check(w, {3, 0, 2, 1}));
  CHECK(readout_quartic(w) ==
        std::vector<Rat>{make_rat(2, 3), Rat(5), Rat(-1), Rat(7), Rat(11)});
}

TEST_CASE("sym_embed: cubic pair") {
  std::vector<Rat> c = {Rat(1), Rat(6), Rat(-3), Rat(2),
                        Rat(0), Rat(9), Rat(1),  make_rat(1, 2)};
  RationalTensor t = sym_embed_cubic_pair(c);
  CHECK(t.shape == std::vector<int>{2, 2, 2, 2});
  CHECK(t.tag_consistent());
  CHECK(symmetry_check(t, {0, 3, 1, 2}));
  // Slice 0 is the triply symmetric cube of the first cubic: entry with one
  // index 2 is 6/3 = 2; slice 1 entry with two indices 2 is 1/3.
  CHECK(t.at({0, 0, 1, 0}) == 2);
  CHECK(t.at({1, 1, 0, 1}) == make_rat(1, 3));
  CHECK(readout_cubic_pair(t) == c);
}

TEST_CASE("sym_embed: ternary cubic") {
  // x^3 + y^3 + z^3 -> unit entries on the three diagonal corners.
  std::vector<Rat> fermat = {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0),
                             Rat(0), Rat(1), Rat(0), Rat(0), Rat(1)};
  RationalTensor t = sym_embed_ternary_cubic(fermat);
  CHECK(t.at({0, 0, 0}) == 1);
  CHECK(t.at({1, 1, 1}) == 1);
  CHECK(t.at({2, 2, 2}) == 1);
  Rat total(0);
  for (const auto& e : t.entries) total += e;
  CHECK(total == 3);

  // Generic cubic: full symmetry, weights divided exactly, readout inverts.
  std::vector<Rat> c = {Rat(2),  Rat(3), Rat(-6), Rat(9),  Rat(5),
                        Rat(12), Rat(7), Rat(1),  Rat(-3), make_rat(4, 7)};
  RationalTensor u = sym_embed_ternary_cubic(c);
  CHECK(u.tag_consistent());
  CHECK(symmetry_check(u, {2, 0, 1}));
  CHECK(u.at({0, 0, 1}) == 1);            // coeff 3 on x^2 y, weight 3
  CHECK(u.at({0, 1, 2}) == make_rat(5, 6));  // coeff 5 on xyz, weight 6
  CHECK(readout_ternary_cubic(u) == c);
}

TEST_CASE("skew_embed kind 2,2 matches the block display") {
  RationalTensor h = basis_tensor({2, 2, 2, 2}, {0, 0, 0, 0});  // h_1111 = 1
  RationalTensor s = skew_embed(h, "2,2");
  CHECK(s.shape == std::vector<int>{2, 2, 4, 4});
  CHECK(s.at({0, 0, 0, 2}) == 1);   // block (1,1), entry (1,3) = h_1111
  CHECK(s.at({0, 0, 2, 0}) == -1);  // skew partner
  Rat total(0);
  for (const auto& e : s.entries) total += e;
  CHECK(total == 0);

  RationalTensor r = pseudo_random({2, 2, 2, 2}, 42);
  RationalTensor sr = skew_embed(r, "2,2");
  for (int i = 0; i < 2; i++)
    for (int j = 0; j < 2; j++)
      for (int p = 0; p < 4; p++)
        for (int q = 0; q < 4; q++)
          CHECK(sr.at({i, j, p, q}) == -sr.at({i, j, q, p}));
  // Block (i,j) holds slice h_{ij..} in its upper-right corner.
  CHECK(sr.at({1, 0, 1, 2}) == r.at({1, 0, 1, 0}));
}

TEST_CASE("skew_embed kind 2,2,2 is alternating with unit blocks") {
  RationalTensor h = basis_tensor({2, 2, 2, 2}, {0, 1, 0, 1});  // h_1212 = 1
  RationalTensor s = skew_embed(h, "2,2,2");
  CHECK(s.shape == std::vector<int>{2, 6, 6, 6});
  // Identity block assignment: (block W2 comp 2, block W3 comp 1, block W4
  // comp 2) = indices (1, 2, 5) with sign +1.
  CHECK(s.at({0, 1, 2, 5}) == 1);
  // Swapping two of the last three arguments flips the sign.
  CHECK(s.at({0, 2, 1, 5}) == -1);
  CHECK(s.at({0, 5, 2, 1}) == -1);
  CHECK(s.at({0, 1, 5, 2}) == -1);
  CHECK(s.at({0, 2, 5, 1}) == 1);
  CHECK(s.at({0, 5, 1, 2}) == 1);
  // Same-block pairs vanish.
  CHECK(s.at({0, 1, 0, 5}) == 0);

  RationalTensor r = pseudo_random({2, 2, 2, 2}, 9);
  RationalTensor sr = skew_embed(r, "2,2,2");
  std::vector<int> idx(4, 0);
  do {
    CHECK(sr.at(idx) == -sr.at({idx[0], idx[2], idx[1], idx[3]}));
    CHECK(sr.at(idx) == -sr.at({idx[0], idx[1], idx[3], idx[2]}));
  } while (next_index(sr.shape, idx));
}

TEST_CASE("skew_embed kind 3,3") {
  RationalTensor b = basis_tensor({3, 3, 3}, {1, 0, 2});  // b_213 = 1
  RationalTensor s = skew_embed(b, "3,3");
  CHECK(s.shape == std::vector<int>{3, 6, 6});
  // phi-bar(e2, (e1,0), (0,e3)) = phi(e2,e1,e3) = 1.
  CHECK(s.at({1, 0, 5}) == 1);
  CHECK(s.at({1, 5, 0}) == -1);
  Rat total(0);
  for (const auto& e : s.entries) total += e;
  CHECK(total == 0);
}

TEST_CASE("skew_embed is linear; errors on bad input") {
  RationalTensor a = pseudo_random({2, 2, 2, 2}, 3);
  RationalTensor b = pseudo_random({2, 2, 2, 2}, 4);
  for (const char* kind : {"2,2", "2,2,2"})
    CHECK(skew_embed(a + b, kind) == skew_embed(a, kind) + skew_embed(b, kind));
  RationalTensor z({3, 3, 3});
  CHECK(skew_embed(z, "3,3").is_zero());
  CHECK_THROWS_AS(skew_embed(a, "3,3"), ShapeMismatch);
  CHECK_THROWS_AS(skew_embed(a, "nope"), std::invalid_argument);
}

TEST_CASE("act preserves symmetry tags on tied axes") {
  RationalTensor t =
      sym_embed_quartic({Rat(1), Rat(-2), Rat(3), Rat(0), make_rat(5, 2)});
  Mat g = {{Rat(2), Rat(1)}, {Rat(3), Rat(2)}};
  RationalTensor u = act_tied(t, g);
  CHECK(u.symmetry == SymmetryTag::full());
  CHECK(u.tag_consistent());
  // Acting on a single tied axis clears the tag.
  CHECK(act(t, 1, g).symmetry == SymmetryTag::none());
  // Sym-last-3: act_tied leaves the first axis alone.
  RationalTensor cp = sym_embed_cubic_pair(
      {Rat(1), Rat(0), Rat(2), Rat(0), Rat(0), Rat(3), Rat(0), Rat(4)});
  RationalTensor cpu = act_tied(cp, g);
  CHECK(cpu.symmetry == SymmetryTag::last(3));
  CHECK(cpu.tag_consistent());
  CHECK(slice(cpu, 0, 0) == act(act(act(slice(cp, 0, 0), 0, g), 1, g), 2, g));
}

TEST_CASE("symmetry tag parsing round trip") {
  CHECK(SymmetryTag::parse("full-sym") == SymmetryTag::full());
  CHECK(SymmetryTag::parse("sym-last-3") == SymmetryTag::last(3));
  CHECK(SymmetryTag::parse("none") == SymmetryTag::none());
  CHECK(SymmetryTag::parse(SymmetryTag::last(2).str()) == SymmetryTag::last(2));
  CHECK_THROWS_AS(SymmetryTag::parse("bogus"), std::invalid_argument);
}
