#include "betti/monomial.hpp"

#include "betti/errors.hpp"

#include <algorithm>
#include <unordered_map>

namespace betti {

namespace {

constexpr int kMaxExponent = 1'000'000'000;

bool is_space(char c)
{
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

} // namespace

PolynomialContext PolynomialContext::standard(int n)
{
    PolynomialContext ctx;
    ctx.variable_names.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) ctx.variable_names.push_back("x" + std::to_string(i));
    return ctx;
}

long long Monomial::degree() const
{
    long long d = 0;
    for (int e : exponents) d += e;
    return d;
}

bool Monomial::is_one() const
{
    return degree() == 0;
}

bool Monomial::squarefree() const
{
    for (int e : exponents) {
        if (e > 1) return false;
    }
    return true;
}

bool Monomial::divides(const Monomial& other) const
{
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > other.exponents[i]) return false;
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        out.exponents[i] = std::max(out.exponents[i], other.exponents[i]);
    }
    return out;
}

VertexSet Monomial::support_mask() const
{
    VertexSet m = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > 0) m |= vbit(static_cast<int>(i));
    }
    return m;
}

std::string Monomial::to_string(const PolynomialContext& ctx) const
{
    std::string out;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ctx.variable_names[i];
        if (exponents[i] > 1) out += '^' + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
}

bool monomial_order_less(const Monomial& a, const Monomial& b)
{
    const long long da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Graded lex with x1 > x2 > ...: among equal degrees, more of an earlier
    // variable sorts first, so (x1*x3, x2*x4) reads in the natural order.
    return a.exponents > b.exponents;
}

Monomial parse_monomial(std::string_view text, const PolynomialContext& ctx)
{
    std::unordered_map<std::string_view, int> index;
    for (int i = 0; i < ctx.n(); ++i) index.emplace(ctx.variable_names[static_cast<std::size_t>(i)], i);

    Monomial out = Monomial::one(ctx.n());
    std::size_t pos = 0;
    const std::size_t len = text.size();
    auto skip_space = [&] {
        while (pos < len && is_space(text[pos])) ++pos;
    };

    bool expect_term = true;
    skip_space();
    if (pos == len) throw ParseError("empty monomial");
    while (pos < len) {
        if (!expect_term) {
            if (text[pos] != '*') throw ParseError("expected '*' in monomial near '" + std::string(text.substr(pos)) + "'");
            ++pos;
            skip_space();
            expect_term = true;
            continue;
        }
        // name: maximal run free of '*', '^' and whitespace
        const std::size_t start = pos;
        while (pos < len && text[pos] != '*' && text[pos] != '^' && !is_space(text[pos])) ++pos;
        if (pos == start) throw ParseError("expected variable name in monomial");
        const std::string_view name = text.substr(start, pos - start);
        const auto it = index.find(name);
        if (it == index.end() && name != "1") throw ParseError("unknown variable '" + std::string(name) + "'");
        skip_space();
        long long exponent = 1;
        if (pos < len && text[pos] == '^') {
            ++pos;
            skip_space();
            if (pos == len || text[pos] < '0' || text[pos] > '9') throw ParseError("expected exponent after '^'");
            exponent = 0;
            while (pos < len && text[pos] >= '0' && text[pos] <= '9') {
                exponent = exponent * 10 + (text[pos] - '0');
                if (exponent > kMaxExponent) throw ParseError("exponent overflow");
                ++pos;
            }
            if (exponent == 0) throw ParseError("exponent must be positive");
            skip_space();
        }
        if (it != index.end()) { // the literal term "1" contributes nothing
            auto& slot = out.exponents[static_cast<std::size_t>(it->second)];
            const long long total = static_cast<long long>(slot) + exponent;
            if (total > kMaxExponent) throw ParseError("exponent overflow");
            slot = static_cast<int>(total);
        }
        expect_term = false;
    }
    if (expect_term) throw ParseError("trailing '*' in monomial");
    return out;
}

bool MonomialIdeal::is_unit() const
{
    for (const auto& g : generators) {
        if (g.is_one()) return true;
    }
    return false;
}

bool MonomialIdeal::squarefree() const
{
    for (const auto& g : generators) {
        if (!g.squarefree()) return false;
    }
    return true;
}

std::string MonomialIdeal::to_string() const
{
    if (is_zero()) return "(0)";
    std::string out = "(";
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (i) out += ", ";
        out += generators[i].to_string(context);
    }
    out += ")";
    return out;
}

MonomialIdeal minimalize(std::vector<Monomial> gens, const PolynomialContext& ctx)
{
    for (const auto& g : gens) {
        if (g.n() != ctx.n()) throw DomainError("generator does not match context arity");
    }
    std::sort(gens.begin(), gens.end(), monomial_order_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& k : kept) {
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g);
    }
    return MonomialIdeal{ctx, std::move(kept)};
}

std::pair<long long, long long> degree_stats(const MonomialIdeal& ideal)
{
    if (ideal.is_zero()) throw DomainError("degree_stats: zero ideal");
    long long c = ideal.generators.front().degree();
    long long d = c;
    for (const auto& g : ideal.generators) {
        c = std::min(c, g.degree());
        d = std::max(d, g.degree());
    }
    return {c, d};
}

int polarized_variable_count(const MonomialIdeal& ideal)
{
    if (ideal.is_zero()) throw DomainError("polarize: zero ideal");
    long long total = 0;
    for (int v = 0; v < ideal.context.n(); ++v) {
        int mx = 0;
        for (const auto& g : ideal.generators) mx = std::max(mx, g.exponents[static_cast<std::size_t>(v)]);
        total += mx;
    }
    if (total > (1LL << 30)) throw CapError("polarization would need too many variables");
    return static_cast<int>(total);
}

Polarization polarize(const MonomialIdeal& ideal)
{
    if (ideal.is_zero()) throw DomainError("polarize: zero ideal");
    if (ideal.squarefree()) {
        Polarization out{ideal, {}};
        out.var_origin.resize(static_cast<std::size_t>(ideal.context.n()));
        for (int v = 0; v < ideal.context.n(); ++v) out.var_origin[static_cast<std::size_t>(v)] = v;
        return out;
    }

    const int n = ideal.context.n();
    std::vector<int> copies(static_cast<std::size_t>(n), 0);
    for (const auto& g : ideal.generators) {
        for (int v = 0; v < n; ++v) copies[static_cast<std::size_t>(v)] = std::max(copies[static_cast<std::size_t>(v)], g.exponents[static_cast<std::size_t>(v)]);
    }

    PolynomialContext ctx2;
    std::vector<int> origin;
    // slot_base[v] = index in ctx2 of the first copy of variable v
    std::vector<int> slot_base(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        slot_base[static_cast<std::size_t>(v)] = ctx2.n();
        for (int k = 1; k <= copies[static_cast<std::size_t>(v)]; ++k) {
            ctx2.variable_names.push_back(ideal.context.variable_names[static_cast<std::size_t>(v)] + "#" + std::to_string(k));
            origin.push_back(v);
        }
    }

    std::vector<Monomial> gens2;
    gens2.reserve(ideal.generators.size());
    for (const auto& g : ideal.generators) {
        Monomial m = Monomial::one(ctx2.n());
        for (int v = 0; v < n; ++v) {
            for (int k = 0; k < g.exponents[static_cast<std::size_t>(v)]; ++k) {
                m.exponents[static_cast<std::size_t>(slot_base[static_cast<std::size_t>(v)] + k)] = 1;
            }
        }
        gens2.push_back(std::move(m));
    }
    return Polarization{minimalize(std::move(gens2), ctx2), std::move(origin)};
}

} // namespace betti
