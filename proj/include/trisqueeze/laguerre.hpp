#pragma once

#include <fmt/format.h>

#include "trisqueeze/error.hpp"

namespace trisqueeze {

inline constexpr int kMaxLaguerreDegree = 60;

namespace detail {

template <typename Scalar>
void check_laguerre_args(int k, Scalar gamma) {
  if (k < 0 || k > kMaxLaguerreDegree) {
    throw DomainError(fmt::format("Laguerre degree {} outside 0..{}", k, kMaxLaguerreDegree));
  }
  if (!(gamma > Scalar(-1))) {
    throw DomainError(fmt::format("Laguerre order {} must exceed -1", static_cast<double>(gamma)));
  }
}

}  // namespace detail

/// Associated Laguerre polynomial L_k^gamma(x) by the forward three-term recurrence
/// (m+1) L_{m+1} = (2m+1+gamma-x) L_m - (m+gamma) L_{m-1}.
template <typename Scalar>
Scalar laguerre(int k, Scalar gamma, Scalar x) {
  detail::check_laguerre_args(k, gamma);
  Scalar prev(1);
  if (k == 0) return prev;
  Scalar cur = Scalar(1) + gamma - x;
  for (int m = 1; m < k; ++m) {
    const Scalar next = ((Scalar(2 * m + 1) + gamma - x) * cur - (Scalar(m) + gamma) * prev) / Scalar(m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

template <typename Scalar>
Scalar laguerre(int k, Scalar x) {
  return laguerre(k, Scalar(0), x);
}

/// eta^k L_k^gamma(c / eta), continuous through eta = 0 where it tends to (-c)^k / k!.
///
/// Same recurrence scaled by eta^{m+1}:
/// (m+1) M_{m+1} = ((2m+1+gamma) eta - c) M_m - (m+gamma) eta^2 M_{m-1}.
template <typename Scalar>
Scalar laguerre_homogeneous(int k, Scalar gamma, Scalar eta, Scalar c) {
  detail::check_laguerre_args(k, gamma);
  Scalar prev(1);
  if (k == 0) return prev;
  Scalar cur = (Scalar(1) + gamma) * eta - c;
  for (int m = 1; m < k; ++m) {
    const Scalar next =
        ((Scalar(2 * m + 1) + gamma) * eta - c) * cur / Scalar(m + 1) - (Scalar(m) + gamma) * eta * eta * prev / Scalar(m + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace trisqueeze
