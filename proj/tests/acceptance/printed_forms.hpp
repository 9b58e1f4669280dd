#pragma once

#include "latsum/symbolic.hpp"

namespace latsum::printed {

// the displayed polynomial forms, typed in factor by factor
inline SymExpr q(long n, long d = 1) { return SymExpr(GaussianRational(mpq_class(n, d))); }

struct Vars {
  SymExpr k2 = SymExpr::k() * SymExpr::k();
  SymExpr K = SymExpr::K();
  SymExpr Kp = SymExpr::Kp();
  SymExpr E = SymExpr::E();
  SymExpr pi = SymExpr::pi_pow(1);
};

inline SymExpr s24_ix() {
  Vars v;
  auto& [k2, K, Kp, E, pi] = v;
  SymExpr inner = q(16) * E * (E - K) * (E + (k2 - q(1)) * K) * Kp * Kp -
                  q(4) * (q(3) * E * E + q(2) * E * (k2 - q(2)) * K - (k2 - q(1)) * K * K) * Kp * pi +
                  (q(3) * E + (k2 - q(2)) * K) * pi * pi;
  return canonicalize(q(4, 3) * SymExpr::pi_pow(-2) * q(4) * Kp * inner);
}

inline SymExpr s24_half() {
  Vars v;
  auto& [k2, K, Kp, E, pi] = v;
  SymExpr inner =
      q(16) * (q(2) * E - K) * (E * E + q(2) * E * (k2 - q(1)) * K - (k2 - q(1)) * K * K) * Kp * Kp -
      q(8) * (q(3) * E * E + E * (q(4) * k2 - q(5)) * K - q(2) * (k2 - q(1)) * K * K) * Kp * pi +
      (q(6) * E + (q(4) * k2 - q(5)) * K) * pi * pi;
  return canonicalize(q(2, 3) * SymExpr::pi_pow(-2) * Kp * inner);
}

inline SymExpr s35_ix() {
  Vars v;
  auto& [k2, K, Kp, E, pi] = v;
  SymExpr inner =
      q(48) * E * (E - K) * (E + (k2 - q(1)) * K) * Kp * Kp * pi -
      q(16) *
          (q(3) * pow(E, 4) + q(4) * pow(E, 3) * (k2 - q(2)) * K - q(6) * E * E * (k2 - q(1)) * K * K -
           pow(k2 - q(1), 2) * pow(K, 4)) *
          pow(Kp, 3) -
      q(6) * (q(3) * E * E + q(2) * E * (k2 - q(2)) * K - (k2 - q(1)) * K * K) * Kp * pi * pi +
      (q(3) * E + (k2 - q(2)) * K) * pow(pi, 3);
  return canonicalize(q(4, 3) * SymExpr::pi_pow(-3) * Kp * inner);
}

inline SymExpr s35_half() {
  Vars v;
  auto& [k2, K, Kp, E, pi] = v;
  SymExpr inner =
      q(48) * (q(2) * E - K) * (E * E + K * (q(2) * E - K) * (k2 - q(1))) * Kp * Kp * pi -
      q(32) *
          (q(3) * pow(E, 4) + q(2) * pow(E, 3) * (q(4) * k2 - q(5)) * K +
           (k2 - q(1)) * K * K * (q(6) * E * K - q(12) * E * E - K * K)) *
          pow(Kp, 3) -
      q(12) * (q(3) * E * E + E * (q(4) * k2 - q(5)) * K - q(2) * (k2 - q(1)) * K * K) * Kp * pi * pi +
      (q(6) * E + (q(4) * k2 - q(5)) * K) * pow(pi, 3);
  return canonicalize(q(2, 3) * SymExpr::pi_pow(-3) * Kp * inner);
}

inline SymExpr s46_ix() {
  Vars v;
  auto& [k2, K, Kp, E, pi] = v;
  SymExpr a = q(256) *
              (q(3) * pow(E, 5) + q(5) * pow(E, 4) * (k2 - q(2)) * K - q(10) * pow(E, 3) * (k2 - q(1)) * K * K -
               q(5) * E * pow(k2 - q(1), 2) * pow(K, 4) - (k2 - q(2)) * pow(k2 - q(1), 2) * pow(K, 5)) *
              pow(Kp, 4);
  SymExpr b = q(320) *
              (q(3) * pow(E, 4) + q(4) * pow(E, 3) * (k2 - q(2)) * K - q(6) * E * E * (k2 - q(1)) * K * K -
               pow(k2 - q(1), 2) * pow(K, 4)) *
              pow(Kp, 3) * pi;
  SymExpr c = q(40) * (q(3) * E * E + q(2) * E * (k2 - q(2)) * K - (k2 - q(1)) * K * K) * Kp * pow(pi, 3);
  SymExpr d = q(5) * (q(3) * E + (k2 - q(2)) * K) * pow(pi, 4);
  SymExpr e = q(480) * E * (E - K) * (E + (k2 - q(1)) * K) * Kp * Kp * pi * pi;
  return canonicalize(q(4, 15) * SymExpr::pi_pow(-4) * Kp * (a - b - c + d + e));
}

inline SymExpr s46_half() {
  Vars v;
  auto& [k2, K, Kp, E, pi] = v;
  SymExpr a = q(256) *
              (q(6) * pow(E, 5) + q(5) * pow(E, 4) * (q(4) * k2 - q(5)) * K - q(40) * pow(E, 3) * (k2 - q(1)) * K * K +
               (k2 - q(1)) * (q(30) * E * E * pow(K, 3) - q(10) * E * pow(K, 4) + pow(K, 5))) *
              pow(Kp, 4);
  SymExpr b = q(640) *
              (q(3) * pow(E, 4) + q(2) * pow(E, 3) * (q(4) * k2 - q(5)) * K +
               (k2 - q(1)) * (q(6) * E * pow(K, 3) - q(12) * E * E * K * K - pow(K, 4))) *
              pow(Kp, 3) * pi;
  SymExpr c = q(80) * (q(3) * E * E + E * (q(4) * k2 - q(5)) * K - q(2) * (k2 - q(1)) * K * K) * Kp * pow(pi, 3);
  SymExpr d = q(5) * (q(6) * E + (q(4) * k2 - q(5)) * K) * pow(pi, 4);
  SymExpr e = q(480) * (q(2) * E - K) * (E * E + (k2 - q(1)) * (q(2) * E * K - K * K)) * Kp * Kp * pi * pi;
  return canonicalize(q(2, 15) * SymExpr::pi_pow(-4) * Kp * (a - b - c + d + e));
}

}  // namespace latsum::printed
