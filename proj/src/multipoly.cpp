#include "diorec/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace diorec {

bool GradedLexDesc::operator()(const Mono& a, const Mono& b) const {
    unsigned long da = std::accumulate(a.begin(), a.end(), 0ul);
    unsigned long db = std::accumulate(b.begin(), b.end(), 0ul);
    if (da != db) return da > db;
    return a > b;  // lexicographic, leftmost variable most significant
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Int& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Mono(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::var(std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    Mono e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(e, Int(1));
    return p;
}

std::size_t MultiPoly::var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw std::invalid_argument("unknown variable: " + name);
    return static_cast<std::size_t>(it - vars_.begin());
}

long MultiPoly::total_degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, static_cast<long>(std::accumulate(e.begin(), e.end(), 0ul)));
    return d;
}

bool MultiPoly::is_homogeneous(unsigned long degree) const {
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0ul) != degree) return false;
    return true;
}

Int MultiPoly::coeff(const Mono& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void MultiPoly::add_term(const Mono& exp, const Int& c) {
    if (exp.size() != vars_.size()) throw std::invalid_argument("exponent tuple length mismatch");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void require_same_vars(const MultiPoly& a, const MultiPoly& b) {
    if (a.variables() != b.variables())
        throw std::invalid_argument("polynomials over different variable lists");
}

}  // namespace

bool MultiPoly::operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    require_same_vars(*this, o);
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    require_same_vars(*this, o);
    MultiPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    require_same_vars(*this, o);
    MultiPoly r(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Mono e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Int& k) const {
    MultiPoly r(vars_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

Int MultiPoly::eval(const std::vector<Int>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point length mismatch");
    Int acc(0);
    for (const auto& [e, c] : terms_) {
        Int t(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned long k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point length mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
        Rat t(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned long k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
    if (bindings.empty()) throw std::invalid_argument("substitute needs at least one binding");
    const std::vector<std::string>& image_vars = bindings.begin()->second.variables();
    for (const auto& [name, img] : bindings)
        if (img.variables() != image_vars)
            throw std::invalid_argument("binding images use different variable lists");

    // images indexed by this polynomial's variable positions; unbound
    // variables are only an error if they actually occur
    std::vector<const MultiPoly*> image(vars_.size(), nullptr);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = bindings.find(vars_[i]);
        if (it != bindings.end()) image[i] = &it->second;
    }

    MultiPoly acc(image_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(image_vars, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!image[i]) throw std::invalid_argument("unbound variable: " + vars_[i]);
            for (unsigned long k = 0; k < e[i]; ++k) term = term * *image[i];
        }
        acc = acc + term;
    }
    return acc;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
    if (var >= vars_.size()) throw std::invalid_argument("derivative variable out of range");
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Mono d(e);
        --d[var];
        r.add_term(d, c * Int(e[var]));
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        std::vector<std::string> factors;
        if (mag != 1) factors.push_back(mag.get_str());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (e[i] == 1)
                factors.push_back(vars_[i]);
            else
                factors.push_back(vars_[i] + "^" + std::to_string(e[i]));
        }
        if (factors.empty()) factors.push_back("1");
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) out << "*";
            out << factors[i];
        }
    }
    return out.str();
}

MultiPoly MultiPoly::parse(const std::string& text, std::vector<std::string> vars) {
    MultiPoly p(std::move(vars));
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&](const std::string& what) -> std::invalid_argument {
        return std::invalid_argument("polynomial parse error at offset " + std::to_string(i) +
                                     ": " + what);
    };

    skip_ws();
    if (i == text.size()) throw fail("empty input");
    bool any = false;
    int pending_sign = +1;
    if (text[i] == '-') {
        pending_sign = -1;
        ++i;
    } else if (text[i] == '+') {
        ++i;
    }
    while (true) {
        skip_ws();
        // one term: factors separated by '*'
        Int coeff(pending_sign);
        Mono exp(p.vars_.size(), 0);
        bool saw_factor = false;
        while (true) {
            skip_ws();
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                std::size_t j = i;
                while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
                coeff *= Int(text.substr(i, j - i));
                i = j;
                saw_factor = true;
            } else if (i < text.size() && (std::isalpha(static_cast<unsigned char>(text[i])) ||
                                           text[i] == '_')) {
                std::size_t j = i;
                while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                           text[j] == '_'))
                    ++j;
                std::size_t v = p.var_index(text.substr(i, j - i));
                i = j;
                unsigned long k = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                        throw fail("exponent expected after '^'");
                    k = 0;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                        k = k * 10 + static_cast<unsigned long>(text[i++] - '0');
                }
                exp[v] += k;
                saw_factor = true;
            } else {
                throw fail("factor expected");
            }
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                continue;
            }
            break;
        }
        if (!saw_factor) throw fail("empty term");
        p.add_term(exp, coeff);
        any = true;

        skip_ws();
        if (i == text.size()) break;
        if (text[i] == '+')
            pending_sign = +1;
        else if (text[i] == '-')
            pending_sign = -1;
        else
            throw fail("'+' or '-' expected between terms");
        ++i;
    }
    if (!any) throw fail("no terms");
    return p;
}

MultiPoly determinant(const PolyMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows == 0 || m.rows > 6)
        throw std::invalid_argument("determinant supports sizes 1 through 6");
    if (m.entries.size() != m.rows * m.cols)
        throw std::invalid_argument("matrix entry count does not match its shape");
    const std::vector<std::string>& vars = m.entries.front().variables();
    for (const auto& e : m.entries)
        if (e.variables() != vars)
            throw std::invalid_argument("matrix entries use different variable lists");

    // cofactor expansion along the first row, recursing on index subsets
    std::function<MultiPoly(std::size_t, std::vector<std::size_t>)> det =
        [&](std::size_t row, std::vector<std::size_t> cols) -> MultiPoly {
        if (cols.size() == 1) return m.at(row, cols[0]);
        MultiPoly acc(vars);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            std::vector<std::size_t> rest;
            rest.reserve(cols.size() - 1);
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != k) rest.push_back(cols[j]);
            MultiPoly sub = m.at(row, cols[k]) * det(row + 1, std::move(rest));
            acc = (k % 2 == 0) ? acc + sub : acc - sub;
        }
        return acc;
    };
    std::vector<std::size_t> all(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) all[j] = j;
    return det(0, std::move(all));
}

}  // namespace diorec
