#include "arimat/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

#include "arimat/error.hpp"

namespace arimat {

namespace {

Int parse_int(const std::string& token) {
    std::size_t start = (token[0] == '+' || token[0] == '-') ? 1 : 0;
    if (start == token.size()) throw input_error("bad integer '" + token + "'");
    for (std::size_t i = start; i < token.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
            throw input_error("bad integer '" + token + "'");
    return Int(token);
}

std::vector<std::vector<Int>> read_rows(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw input_error(std::string(what) + " must be an array of vectors");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw input_error(std::string(what) + " must contain vectors");
        std::vector<Int> out;
        for (const auto& x : row) {
            if (!x.is_number_integer())
                throw input_error(std::string(what) + " entries must be integers");
            out.emplace_back(x.get<long long>());
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

Realization from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ambient_rank") || !j.contains("generators"))
        throw input_error("realization JSON needs ambient_rank and generators");
    if (!j["ambient_rank"].is_number_integer() || j["ambient_rank"].get<long long>() < 0)
        throw input_error("ambient_rank must be a nonnegative integer");
    const auto ambient = j["ambient_rank"].get<std::size_t>();
    std::vector<std::vector<Int>> rel;
    if (j.contains("relations")) rel = read_rows(j["relations"], "relations");
    std::vector<std::vector<Int>> gens = read_rows(j["generators"], "generators");
    return Realization(ambient, Lattice(ambient, rel), std::move(gens));
}

Realization from_matrix(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::vector<Int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<Int> row;
        std::string token;
        while (ls >> token) row.push_back(parse_int(token));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw input_error("empty realization file");
    const std::size_t n = rows[0].size();
    for (const auto& row : rows)
        if (row.size() != n) throw input_error("matrix rows must have equal length");
    std::vector<std::vector<Int>> gens(n, std::vector<Int>(rows.size()));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < rows.size(); ++i) gens[j][i] = rows[i][j];
    return Realization(rows.size(), Lattice(rows.size()), std::move(gens));
}

std::string subset_label(Subset a) {
    if (a == 0) return "e";
    std::string out = "{";
    bool first = true;
    for (int b : subset_members(a)) {
        if (!first) out += ",";
        out += std::to_string(b + 1);
        first = false;
    }
    return out + "}";
}

} // namespace

Realization read_realization_text(const std::string& text) {
    const auto pos = text.find_first_not_of(" \t\r\n");
    if (pos == std::string::npos) throw input_error("empty realization file");
    return text[pos] == '{' ? from_json(text) : from_matrix(text);
}

Realization read_realization_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return read_realization_text(buf.str());
}

std::string poset_to_json(const TorsionPoset& p) {
    nlohmann::ordered_json j;
    j["elements"] = nlohmann::ordered_json::array();
    for (int id = 0; id < p.size(); ++id) {
        const PosetNode& nd = p.node(id);
        nlohmann::ordered_json e;
        e["id"] = id;
        e["rank"] = nd.rank;
        e["subset"] = nlohmann::ordered_json::array();
        for (int b : subset_members(nd.subset)) e["subset"].push_back(b + 1);
        e["character"] = nlohmann::ordered_json::array();
        for (const Rat& v : nd.character.values) {
            std::ostringstream os;
            os << v;
            e["character"].push_back(os.str());
        }
        j["elements"].push_back(std::move(e));
    }
    j["covers"] = nlohmann::ordered_json::array();
    for (const auto& [c, par] : p.covers()) j["covers"].push_back({c, par});
    j["components"] = components(p);
    j["f_vector_per_component"] = nlohmann::ordered_json::array();
    for (const auto& comp : components(p)) {
        nlohmann::ordered_json f = nlohmann::ordered_json::array();
        for (const Int& c : f_vector(p, comp).entries)
            f.push_back(c.convert_to<long long>());
        j["f_vector_per_component"].push_back(std::move(f));
    }
    return j.dump(2) + "\n";
}

std::string poset_to_dot(const TorsionPoset& p) {
    std::ostringstream os;
    os << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int id = 0; id < p.size(); ++id)
        os << "  n" << id << " [label=\"(" << subset_label(p.node(id).subset) << "; "
           << p.node(id).character.to_string() << ")\"];\n";
    for (const auto& [c, par] : p.covers()) os << "  n" << c << " -> n" << par << ";\n";
    std::map<int, std::vector<int>> levels;
    for (int id = 0; id < p.size(); ++id) levels[p.node(id).rank].push_back(id);
    for (const auto& [rank, ids] : levels) {
        os << "  { rank=same;";
        for (int id : ids) os << " n" << id << ";";
        os << " }\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace arimat
