#pragma once

#include <memory>
#include <vector>

namespace hmfcert::gl2img {

struct FqTables;

/* F_q, q = p^r <= 121. An element is the integer whose base-p digits are its
 * coefficients in the polynomial basis, low degree first. */
class Fq {
  public:
    /* modulus: the lexicographically smallest (on the integer encoding of the
     * non-leading coefficients) monic primitive polynomial of degree r */
    static Fq make(int p, int r = 1);
    /* caller-chosen monic modulus, low degree first; must be irreducible */
    static Fq with_modulus(int p, std::vector<int> const& modulus);

    int p() const;
    int r() const;
    int q() const;
    std::vector<int> const& modulus() const;

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;
    int inv(int a) const; // a != 0
    int pow(int a, long e) const;
    int from_int(long n) const; // image of an integer
    bool in_subfield(int a, int sub_r) const; // a in F_{p^sub_r}

    bool operator==(Fq const& o) const;

  private:
    std::shared_ptr<FqTables const> t_;
};

} // namespace hmfcert::gl2img
