#pragma once

#include "hmfcert/fq.hpp"
#include "hmfcert/tensor.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hmfcert::gl2img {

/* [[a, b], [c, d]] over some Fq */
struct Mat2 {
    int a = 1, b = 0, c = 0, d = 1;
    bool operator==(Mat2 const& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

Mat2 mat_mul(Fq const& F, Mat2 const& x, Mat2 const& y);
int mat_det(Fq const& F, Mat2 const& x);
int mat_trace(Fq const& F, Mat2 const& x);
Mat2 mat_inverse(Fq const& F, Mat2 const& x);
bool is_scalar(Mat2 const& x);
/* scaled so that the first nonzero entry (row-major) is 1 */
Mat2 projective_normal(Fq const& F, Mat2 const& x);
std::uint32_t encode(Fq const& F, Mat2 const& x);

struct FqMatrixGroup {
    Fq field;
    std::vector<Mat2> generators;
};

/* all elements, identity first; CapExceeded beyond cap */
std::vector<Mat2> closure(FqMatrixGroup const& g, std::size_t cap = 1000000);

enum class ImageType { Reducible, Dihedral, A4, S4, A5, PSL2, PGL2, LargeIntermediate };

struct Classification {
    ImageType type = ImageType::Reducible;
    long n = 0;      // Dihedral(n)
    int q_prime = 0; // PSL2(q'), PGL2(q'), and the field generated by tr^2/det otherwise
    std::size_t order = 0;
    std::size_t projective_order = 0;
    std::map<long, long> element_orders; // projective element orders

    std::string label() const;
};

Classification classify_projective_image(FqMatrixGroup const& g);

/* q' when SL2(F_q') is, up to conjugation in GL2(F_q), the derived subgroup
 * of the group and the group lies in F_q^x GL2(F_q') */
std::optional<int> li_check(FqMatrixGroup const& g);

/* ring adaptor for tensor_induce over F_q */
struct FqRing {
    Fq F;
    int zero() const { return 0; }
    int one() const { return 1; }
    int add(int a, int b) const { return F.add(a, b); }
    int mul(int a, int b) const { return F.mul(a, b); }
};

struct Recovery {
    long a = 0;
    std::vector<long> parts; // ascending
};

/* the 2^d values sum_{t in J} (a - parts_t) + sum_{t not in J} parts_t, ascending */
std::vector<long> subset_sums(long a, std::vector<long> const& parts);
Recovery recover_from_subset_sums(std::vector<long> const& S, int d);

struct TameChar {
    long p = 2;
    int h = 1;
    std::vector<long> e; // E = sum e_i p^i mod p^h - 1
};

/* (p^h - 1) / gcd(E, p^h - 1), and 0 when E = 0 mod p^h - 1 */
long tame_char_order(TameChar const& c);

struct ChainReport {
    bool holds = true;
    long characters_checked = 0;
    std::string counterexample;
};

/* For primes p <= p_max, levels h <= h_max, blocks of h weights with k0 <= k0_max
 * (p > k0 when require_p_above_k0), and every sign choice e_i = +-(k_i - 1):
 * a nonzero tame character of order <= 5 forces 5 sum(k_i - 1) >= h(p - 1). */
ChainReport exceptional_chain_check(long p_max, int h_max, long k0_max, bool require_p_above_k0);

} // namespace hmfcert::gl2img
