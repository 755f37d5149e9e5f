#include "betti/io.hpp"

#include "betti/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace betti {

namespace {

constexpr int kMaxRingVariables = 4096;

// Strips a '#' comment and surrounding whitespace; empty result means the
// line carries nothing.
std::string strip_line(const std::string& line)
{
    std::string s = line;
    const auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

long long parse_count_line(const std::string& line, const std::string& keyword, long long max_value)
{
    std::istringstream in(line);
    std::string head;
    long long n = 0;
    if (!(in >> head >> n) || head != keyword) {
        throw ParseError("first line must be '" + keyword + " <n>', got '" + line + "'");
    }
    std::string rest;
    if (in >> rest) throw ParseError("trailing content after '" + keyword + " <n>'");
    if (n < 1 || n > max_value) {
        throw ParseError("'" + keyword + "' count must be between 1 and " + std::to_string(max_value));
    }
    return n;
}

int digits(long long v)
{
    return static_cast<int>(std::to_string(v).size());
}

std::string pad_left(const std::string& s, int width)
{
    if (static_cast<int>(s.size()) >= width) return s;
    return std::string(static_cast<std::size_t>(width) - s.size(), ' ') + s;
}

std::string label_set(const SimplicialComplex& complex, VertexSet s)
{
    std::string out = "{";
    bool first = true;
    for (int v : set_bits(s)) {
        if (!first) out += ", ";
        out += complex.ground()[static_cast<std::size_t>(v)];
        first = false;
    }
    return out + "}";
}

} // namespace

MonomialIdeal parse_ideal_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    bool have_ring = false;
    PolynomialContext ctx;
    std::vector<Monomial> gens;
    while (std::getline(in, line)) {
        const std::string s = strip_line(line);
        if (s.empty()) continue;
        if (!have_ring) {
            ctx = PolynomialContext::standard(static_cast<int>(parse_count_line(s, "ring", kMaxRingVariables)));
            have_ring = true;
            continue;
        }
        gens.push_back(parse_monomial(s, ctx));
    }
    if (!have_ring) throw ParseError("missing 'ring <n>' line");
    return minimalize(std::move(gens), ctx);
}

MonomialIdeal load_ideal_file(const std::string& path)
{
    return parse_ideal_text(read_file(path));
}

std::string ideal_to_text(const MonomialIdeal& ideal)
{
    std::string out = "ring " + std::to_string(ideal.context.n()) + "\n";
    for (const auto& g : ideal.generators) out += g.to_string(ideal.context) + "\n";
    return out;
}

std::string polarization_to_text(const MonomialIdeal& original)
{
    const Polarization pol = polarize(original);
    const MonomialIdeal& model = pol.ideal;
    std::string out = "ring " + std::to_string(model.context.n()) + "\n";
    if (model.context == original.context) {
        out += "# already square-free\n";
    } else {
        for (int v = 0; v < model.context.n(); ++v) {
            out += "# x" + std::to_string(v + 1) + " = " + model.context.variable_names[static_cast<std::size_t>(v)] + "\n";
        }
    }
    // Re-emit generators against the canonical x1..xn' naming.
    const PolynomialContext canonical = PolynomialContext::standard(model.context.n());
    for (const auto& g : model.generators) out += g.to_string(canonical) + "\n";
    return out;
}

Graph parse_graph_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        const std::string s = strip_line(line);
        if (s.empty()) continue;
        if (!have_header) {
            n = static_cast<int>(parse_count_line(s, "vertices", 63));
            have_header = true;
            continue;
        }
        std::istringstream es(s);
        int u = 0, v = 0;
        std::string rest;
        if (!(es >> u >> v) || (es >> rest)) throw ParseError("expected edge line 'u v', got '" + s + "'");
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError("edge endpoint outside 1.." + std::to_string(n));
        if (u == v) throw ParseError("loops are not allowed");
        edges.emplace_back(u, v);
    }
    if (!have_header) throw ParseError("missing 'vertices <n>' line");
    return Graph::from_edges(n, edges);
}

Graph load_graph_file(const std::string& path)
{
    return parse_graph_text(read_file(path));
}

std::string graph_to_text(const Graph& graph)
{
    std::string out = "vertices " + std::to_string(graph.n()) + "\n";
    for (auto [u, v] : graph.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string render_betti_diagram(const BettiTable& table)
{
    const auto vm = table.value_map();
    int max_i = 0;
    long long min_r = 0, max_r = 0;
    bool first = true;
    for (const auto& [key, v] : vm) {
        (void)v;
        const long long r = key.second - key.first;
        max_i = std::max(max_i, key.first);
        if (first) {
            min_r = max_r = r;
            first = false;
        } else {
            min_r = std::min(min_r, r);
            max_r = std::max(max_r, r);
        }
    }
    std::vector<long long> totals(static_cast<std::size_t>(max_i) + 1, 0);
    for (const auto& [key, v] : vm) totals[static_cast<std::size_t>(key.first)] += v;

    std::vector<int> width(static_cast<std::size_t>(max_i) + 1);
    for (int i = 0; i <= max_i; ++i) {
        int w = std::max(digits(i), digits(totals[static_cast<std::size_t>(i)]));
        for (long long r = min_r; r <= max_r; ++r) {
            const auto it = vm.find({i, static_cast<int>(r) + i});
            if (it != vm.end()) w = std::max(w, digits(it->second));
        }
        width[static_cast<std::size_t>(i)] = w;
    }
    const int label_width = std::max(6, digits(max_r) + 1); // "total:"

    std::string out;
    auto emit_row = [&](const std::string& label, auto cell_text) {
        out += pad_left(label, label_width);
        for (int i = 0; i <= max_i; ++i) {
            out += "  " + pad_left(cell_text(i), width[static_cast<std::size_t>(i)]);
        }
        out += "\n";
    };
    emit_row("", [&](int i) { return std::to_string(i); });
    emit_row("total:", [&](int i) { return std::to_string(totals[static_cast<std::size_t>(i)]); });
    for (long long r = min_r; r <= max_r; ++r) {
        emit_row(std::to_string(r) + ":", [&](int i) -> std::string {
            const auto it = vm.find({i, static_cast<int>(r) + i});
            return it == vm.end() ? "." : std::to_string(it->second);
        });
    }
    return out;
}

std::map<std::pair<int, int>, long long> parse_betti_diagram(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::vector<int> cols;
    std::map<std::pair<int, int>, long long> out;
    bool have_header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!have_header) {
            while (ls >> tok) cols.push_back(std::stoi(tok));
            have_header = true;
            continue;
        }
        if (!(ls >> tok)) continue;
        if (tok == "total:") continue;
        if (tok.empty() || tok.back() != ':') throw ParseError("bad diagram row label '" + tok + "'");
        const int r = std::stoi(tok.substr(0, tok.size() - 1));
        std::size_t c = 0;
        while (ls >> tok) {
            if (c >= cols.size()) throw ParseError("diagram row wider than header");
            if (tok != ".") out[{cols[c], cols[c] + r}] = std::stoll(tok);
            ++c;
        }
    }
    return out;
}

std::string betti_json(const BettiTable& table, const InvariantSummary& summary)
{
    nlohmann::ordered_json j;
    j["field_char"] = table.field.characteristic;
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& [key, v] : table.value_map()) {
        cells.push_back({key.first, key.second, v});
    }
    j["betti"] = std::move(cells);
    j["reg"] = summary.reg;
    j["projdim"] = summary.projdim;
    if (summary.index.has_value()) {
        j["index"] = *summary.index;
    } else {
        j["index"] = "infinity";
    }
    j["pruned_cells"] = table.pruned_cells();
    return j.dump(2) + "\n";
}

std::string complex_report(const SimplicialComplex& complex)
{
    std::string out = "ground: ";
    for (std::size_t v = 0; v < complex.ground().size(); ++v) {
        if (v) out += " ";
        out += complex.ground()[v];
    }
    out += "\nfacets:\n";
    if (complex.is_void()) {
        out += "  (void complex)\n";
        return out;
    }
    for (VertexSet f : complex.facets()) out += "  " + label_set(complex, f) + "\n";
    out += "minimal non-faces:\n";
    for (VertexSet nf : minimal_nonfaces(complex)) out += "  " + label_set(complex, nf) + "\n";
    return out;
}

} // namespace betti
