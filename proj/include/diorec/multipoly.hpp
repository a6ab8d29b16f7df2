#ifndef DIOREC_MULTIPOLY_HPP
#define DIOREC_MULTIPOLY_HPP

// Sparse multivariate polynomials with integer coefficients over a named,
// ordered variable list, plus symbolic matrices and exact determinants.
//
// Terms live in a map keyed by exponent tuple under graded lexicographic
// descending order (higher total degree first; ties broken by the exponent
// tuple with the leftmost variable most significant). Map iteration order is
// therefore the canonical rendering order, which keeps every serialization
// bit-reproducible.

#include <map>
#include <string>
#include <vector>

#include "diorec/numbers.hpp"

namespace diorec {

using Mono = std::vector<unsigned long>;

// "a before b" in canonical order: larger total degree first, then
// lexicographically larger exponent tuple first
struct GradedLexDesc {
    bool operator()(const Mono& a, const Mono& b) const;
};

class MultiPoly {
  public:
    using TermMap = std::map<Mono, Int, GradedLexDesc>;

    MultiPoly() = default;  // zero polynomial over an empty variable list
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}
    static MultiPoly constant(std::vector<std::string> vars, const Int& c);
    static MultiPoly var(std::vector<std::string> vars, const std::string& name);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // -1 for the zero polynomial
    long total_degree() const;
    bool is_homogeneous(unsigned long degree) const;
    // coefficient of an exponent tuple (0 if absent)
    Int coeff(const Mono& exp) const;

    // accumulate c * X^exp, dropping the term if the sum cancels
    void add_term(const Mono& exp, const Int& c);

    bool operator==(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Int& k) const;

    Int eval(const std::vector<Int>& point) const;
    Rat eval(const std::vector<Rat>& point) const;

    // exact composition: every variable occurring in this polynomial must be
    // bound; all images must share one variable list, which becomes the
    // result's variable list
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;

    MultiPoly derivative(std::size_t var) const;

    // canonical rendering: terms in map order, explicit '*', '^' for powers,
    // integer coefficients in decimal (unit coefficients elided)
    std::string to_string() const;
    // inverse of to_string over the given variable list
    static MultiPoly parse(const std::string& text, std::vector<std::string> vars);

  private:
    std::size_t var_index(const std::string& name) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

struct PolyMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<MultiPoly> entries;  // row-major, rows*cols of them

    const MultiPoly& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    MultiPoly& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
};

// exact symbolic determinant by cofactor expansion; the matrices here are
// recurrence windows of size d <= 6, where this is both simple and fast
MultiPoly determinant(const PolyMatrix& m);

}  // namespace diorec

#endif
