#pragma once

// Internal: symbolic reordering of products (k1^x k2^y e_i)... into the form
// r^A s^B k1^K k2^K' e-word, with all exponents integer linear forms in the
// k-exponent symbols (a, b, c, d).

#include "g2rs/endo.hpp"

namespace g2rs::detail {

struct ReorderFactor {
  LinForm k1f, k2f;
  int letter = 0;  // 0 none, 1 = e1, 2 = e2
};

struct ReorderForms {
  LinForm rexp, sexp;
  LinForm k1tot, k2tot;
  Weight wt{};
};

inline ReorderForms reorder_walk(const std::vector<ReorderFactor>& fs) {
  ReorderForms out;
  int P = 0, Q = 0;
  for (const auto& f : fs) {
    // moving k1^x leftward past e1 gains r^x s^2x; past e2, r^-3x s^-3x.
    // moving k2^y leftward past e1 gains r^3y s^3y; past e2, r^-6y s^-3y.
    out.rexp += f.k1f * (P - 3 * Q) + f.k2f * (3 * P - 6 * Q);
    out.sexp += f.k1f * (2 * P - 3 * Q) + f.k2f * (3 * P - 3 * Q);
    out.k1tot += f.k1f;
    out.k2tot += f.k2f;
    if (f.letter == 1) ++P;
    if (f.letter == 2) ++Q;
  }
  out.wt = Weight{P, Q};
  return out;
}

// theta(e1) carries k1^a k2^b, theta(e2) carries k1^c k2^d.
inline ReorderFactor theta_letter(int letter) {
  ReorderFactor f;
  f.letter = letter;
  if (letter == 1) {
    f.k1f.c = {1, 0, 0, 0};
    f.k2f.c = {0, 1, 0, 0};
  } else {
    f.k1f.c = {0, 0, 1, 0};
    f.k2f.c = {0, 0, 0, 1};
  }
  return f;
}

}  // namespace g2rs::detail
