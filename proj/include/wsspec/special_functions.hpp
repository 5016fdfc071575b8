#pragma once

namespace wsspec
{

inline constexpr int kMaxJacobiDegree = 64;

struct JacobiParams
{
    int n;        // degree
    double alpha;
    double beta;
};

// P_n^(alpha, beta)(x) by the three-term recurrence in n.
// Throws DegreeTooLarge for n > kMaxJacobiDegree.
double jacobi(const JacobiParams& jp, double x);

// Same polynomial from the explicit finite sum
//   P_n = 1/n! sum_m C(n,m) (m+alpha+1)_{n-m} (n+alpha+beta+1)_m ((x-1)/2)^m
// which is the gamma-ratio representation with the ratios written as
// Pochhammer symbols so that negative parameters stay finite. Arguments
// x < 0 go through P_n^(a,b)(x) = (-1)^n P_n^(b,a)(-x).
double jacobi_sum(const JacobiParams& jp, double x);

// d/dx P_n^(alpha, beta)(x) = (n + alpha + beta + 1)/2 P_{n-1}^(alpha+1, beta+1)
double jacobi_derivative(const JacobiParams& jp, double x);

// Binomial coefficient C(x, k) for real x and integer k >= 0.
double binomial(double x, int k);

// Rising factorial (x)_k.
double pochhammer(double x, int k);

// 2F1(a, b; 1 + b; 1/2) through the gamma identity
//   2F1(1 - A, b; 1 + b; 1/2) = sqrt(pi) / 2^A * Gamma(1 + A) / Gamma(1/2 + A)
// which presumes A = b - 1. Throws OutOfRegion when A = 1 - a differs from
// b - 1. The identity is exact only for A = 1; elsewhere it is an
// approximation kept for the closed-form normalization report.
double hyp2f1_half(double a, double b);

} // namespace wsspec
