#include "diorec/solver.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace diorec {

namespace {

// budget that turns the "eventually leaves" arguments into checkable loops
constexpr int kStepCap = 10000;

bool weakly_increasing_nonneg(const SolutionTuple& t) {
    if (t.empty() || t.front() < 0) return false;
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] > t[i + 1]) return false;
    return true;
}

bool is_generator(const Recurrence& rec, const SolutionTuple& t) {
    return !weakly_increasing_nonneg(backward(rec, t));
}

Int max_abs(const SolutionTuple& t) {
    Int m(0);
    for (const auto& e : t) {
        Int a = Int(abs(e));
        if (a > m) m = a;
    }
    return m;
}

}  // namespace

std::string tuple_to_string(const SolutionTuple& t) {
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ", ";
        out += t[i].get_str();
    }
    return out + ")";
}

SolutionSet enumerate_below(const MultiPoly& P, const Int& limit) {
    if (P.variables().size() != 3)
        throw std::invalid_argument("enumerate_below expects a three-variable invariant");
    if (limit < 1) throw std::invalid_argument("enumeration limit must be >= 1");
    SolutionSet out;
    out.limit = limit;
    // ascending loops emit the solutions in lexicographic order
    for (Int x(0); x < limit; ++x)
        for (Int y(x); y < limit; ++y)
            for (Int z(y); z < limit; ++z)
                if (P.eval(std::vector<Int>{x, y, z}) == 1)
                    out.solutions.push_back(SolutionTuple{x, y, z});
    return out;
}

GeneratorSet classify_generators(const Recurrence& rec, const SolutionSet& s) {
    GeneratorSet out;
    for (const auto& t : s.solutions)
        if (is_generator(rec, t)) out.generators.push_back(t);

    // completeness: every non-generator must walk back to a generator while
    // staying inside s; escaping means the enumeration limit was too small
    std::set<SolutionTuple> members(s.solutions.begin(), s.solutions.end());
    for (const auto& t : s.solutions) {
        SolutionTuple w = t;
        for (int guard = 0; !is_generator(rec, w); ++guard) {
            if (guard > kStepCap)
                throw std::runtime_error("backward reduction exceeded iteration budget at " +
                                         tuple_to_string(t));
            w = backward(rec, w);
            if (!members.count(w))
                throw std::runtime_error("completeness violation: backward chain of " +
                                         tuple_to_string(t) + " leaves the solution set at " +
                                         tuple_to_string(w) + " (search limit too small?)");
        }
    }
    return out;
}

std::vector<SolutionTuple> orbit(const Recurrence& rec, const SolutionTuple& seed,
                                 long steps_back, long steps_forward) {
    if (static_cast<long>(seed.size()) != rec.order)
        throw std::invalid_argument("orbit seed must have one entry per recurrence order");
    if (steps_back < 0 || steps_forward < 0)
        throw std::invalid_argument("orbit step counts must be nonnegative");
    SolutionTuple w = seed;
    for (long i = 0; i < steps_back; ++i) w = backward(rec, w);
    std::vector<SolutionTuple> out{w};
    out.reserve(static_cast<std::size_t>(steps_back + steps_forward) + 1);
    for (long i = 0; i < steps_back + steps_forward; ++i) {
        w = forward(rec, w);
        out.push_back(w);
    }
    return out;
}

int dominant_sign(const Recurrence& rec, const SolutionTuple& t) {
    AdmissibilityReport rep = is_admissible(rec);
    if (!rep.admissible())
        throw std::invalid_argument("dominant_sign needs an admissible recurrence");
    if (t.size() != 3) throw std::invalid_argument("dominant_sign expects a length-3 window");
    if (t[0] == 0 && t[1] == 0 && t[2] == 0) return 0;

    // (alpha^2 - a alpha - b) x + (alpha - a) y + z = q(alpha) with integer
    // q; since the characteristic polynomial is irreducible, q(alpha) = 0
    // would force q = 0, impossible for a nonzero tuple
    UniPoly q(std::vector<Int>{Int(t[2] - rec.a() * t[1] - rec.b() * t[0]),
                               Int(t[1] - rec.a() * t[0]), t[0]});
    int sg = alg_eval(q, Int(1), *rep.dominant_root).sgn();
    if (sg == 0)
        throw std::logic_error("dominant projection vanished on a nonzero tuple " +
                               tuple_to_string(t));
    return sg;
}

VerifyReport brute_force_verify(const Recurrence& rec, const Int& radius,
                                const GeneratorSet& gens) {
    if (rec.order != 3)
        throw std::invalid_argument("brute_force_verify supports order-3 recurrences only");
    if (radius < 0) throw std::invalid_argument("verification radius must be >= 0");

    MultiPoly P = build_invariant(rec);
    VerifyReport out;
    out.radius = radius;
    for (Int x = Int(-radius); x <= radius; ++x)
        for (Int y = Int(-radius); y <= radius; ++y)
            for (Int z = Int(-radius); z <= radius; ++z)
                if (P.eval(std::vector<Int>{x, y, z}) == 1)
                    out.solutions.push_back(SolutionTuple{x, y, z});

    // walk each generator's orbit both ways; the first claim on a window
    // wins, so the report does not depend on accidents of overlap
    std::map<SolutionTuple, std::pair<SolutionTuple, long>> claimed;
    auto inside = [&](const SolutionTuple& w) {
        for (const auto& e : w)
            if (Int(abs(e)) > radius) return false;
        return true;
    };
    auto walk = [&](const SolutionTuple& g, int dir) {
        SolutionTuple w = g;
        long step = 0;
        Int prev = max_abs(w);
        int growth = 0;
        for (int it = 0;; ++it) {
            if (it > kStepCap)
                throw std::runtime_error("orbit walk exceeded iteration budget from " +
                                         tuple_to_string(g));
            if (inside(w) && !claimed.count(w)) claimed[w] = {g, step};
            // durably outside: every entry beyond the radius and the window
            // magnitude growing for three consecutive steps (tolerates the
            // transient oscillation of backward windows). Growth is
            // non-strict: the running maximum of a sliding window plateaus
            // for a couple of steps every time a peak entry crosses it.
            Int cur = max_abs(w);
            if (it > 0) growth = (cur >= prev) ? growth + 1 : 0;
            prev = cur;
            bool all_out = true;
            for (const auto& e : w)
                if (Int(abs(e)) <= radius) all_out = false;
            if (all_out && growth >= 3) break;
            w = (dir > 0) ? forward(rec, w) : backward(rec, w);
            step += dir;
        }
    };
    for (const auto& g : gens.generators) {
        walk(g, +1);
        walk(g, -1);
    }

    for (const auto& s : out.solutions) {
        auto it = claimed.find(s);
        if (it == claimed.end())
            out.unexplained.push_back(s);
        else
            out.matches.push_back(OrbitMatch{s, it->second.first, it->second.second});
    }
    return out;
}

}  // namespace diorec
