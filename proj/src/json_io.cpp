#include "ugit/json_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "ugit/error.hpp"

namespace ugit {

namespace {

void check_keys(const Json& j, std::initializer_list<const char*> allowed,
                const std::string& context) {
    if (!j.is_object()) fail("BadInput", context + ": expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) { ok = true; break; }
        if (!ok) fail("BadInput", context + ": unknown key '" + it.key() + "'");
    }
}

const Json& get_required(const Json& j, const char* key, const std::string& context) {
    auto it = j.find(key);
    if (it == j.end()) fail("BadInput", context + ": missing key '" + key + "'");
    return *it;
}

long long get_integer(const Json& j, const std::string& context) {
    if (!j.is_number_integer()) fail("BadInput", context + ": expected an integer");
    return j.get<long long>();
}

unsigned long long get_unsigned(const Json& j, const std::string& context) {
    long long v = get_integer(j, context);
    if (v < 0) fail("BadInput", context + ": expected a nonnegative integer");
    return static_cast<unsigned long long>(v);
}

} // namespace

Json rat_to_json(const Rat& r) { return Json(r.str()); }

Rat rat_from_json(const Json& j, const std::string& context) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    fail("BadInput", context + ": expected a rational string or integer");
}

Json vec_to_json(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const Rat& r : v) a.push_back(rat_to_json(r));
    return a;
}

std::vector<Rat> vec_from_json(const Json& j, const std::string& context) {
    if (!j.is_array()) fail("BadInput", context + ": expected an array");
    std::vector<Rat> v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rat_from_json(j[i], context + "[" + std::to_string(i) + "]"));
    return v;
}

Json matrix_to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix matrix_from_json(const Json& j, const std::string& context) {
    if (!j.is_array() || j.empty()) fail("BadInput", context + ": expected a nonempty array of rows");
    std::size_t cols = 0;
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array()) fail("BadInput", context + ": row " + std::to_string(r) + " is not an array");
        if (r == 0) cols = j[r].size();
        if (j[r].size() != cols) fail("BadInput", context + ": ragged rows");
    }
    QMatrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rat_from_json(j[r][c], context + "[" + std::to_string(r) + "][" +
                                                     std::to_string(c) + "]");
    return m;
}

Json rep_to_json(const GradedUnipotentRep& rep) {
    Json j;
    j["dim_v"] = rep.dim_v;
    j["torus_weights"] = rep.torus_weights;
    Json basis = Json::array();
    for (const LieGenerator& g : rep.lie_basis) {
        Json e;
        e["grade"] = g.grade;
        e["op"] = matrix_to_json(g.op);
        basis.push_back(std::move(e));
    }
    j["lie_basis"] = std::move(basis);
    if (rep.structure_consts) {
        Json consts = Json::array();
        for (const StructureConst& c : *rep.structure_consts) {
            Json e;
            e["r"] = c.r;
            e["s"] = c.s;
            e["t"] = c.t;
            e["value"] = rat_to_json(c.value);
            consts.push_back(std::move(e));
        }
        j["structure_consts"] = std::move(consts);
    }
    return j;
}

GradedUnipotentRep rep_from_json(const Json& j) {
    check_keys(j, {"dim_v", "torus_weights", "lie_basis", "structure_consts"}, "rep");
    GradedUnipotentRep rep;
    rep.dim_v = static_cast<std::size_t>(get_unsigned(get_required(j, "dim_v", "rep"), "rep.dim_v"));

    const Json& tw = get_required(j, "torus_weights", "rep");
    if (!tw.is_array()) fail("BadInput", "rep.torus_weights: expected an array");
    for (std::size_t i = 0; i < tw.size(); ++i)
        rep.torus_weights.push_back(get_integer(tw[i], "rep.torus_weights[" + std::to_string(i) + "]"));
    if (rep.torus_weights.size() != rep.dim_v)
        fail("BadInput", "rep.torus_weights: length does not match dim_v");

    const Json& basis = get_required(j, "lie_basis", "rep");
    if (!basis.is_array()) fail("BadInput", "rep.lie_basis: expected an array");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::string ctx = "rep.lie_basis[" + std::to_string(i) + "]";
        check_keys(basis[i], {"grade", "op"}, ctx);
        LieGenerator g;
        g.grade = get_integer(get_required(basis[i], "grade", ctx), ctx + ".grade");
        g.op = matrix_from_json(get_required(basis[i], "op", ctx), ctx + ".op");
        if (g.op.rows() != rep.dim_v || g.op.cols() != rep.dim_v)
            fail("BadInput", ctx + ".op: expected a " + std::to_string(rep.dim_v) + "x" +
                                 std::to_string(rep.dim_v) + " matrix");
        rep.lie_basis.push_back(std::move(g));
    }

    if (auto it = j.find("structure_consts"); it != j.end()) {
        if (!it->is_array()) fail("BadInput", "rep.structure_consts: expected an array");
        std::vector<StructureConst> consts;
        for (std::size_t i = 0; i < it->size(); ++i) {
            std::string ctx = "rep.structure_consts[" + std::to_string(i) + "]";
            check_keys((*it)[i], {"r", "s", "t", "value"}, ctx);
            StructureConst c;
            c.r = static_cast<std::size_t>(get_unsigned(get_required((*it)[i], "r", ctx), ctx + ".r"));
            c.s = static_cast<std::size_t>(get_unsigned(get_required((*it)[i], "s", ctx), ctx + ".s"));
            c.t = static_cast<std::size_t>(get_unsigned(get_required((*it)[i], "t", ctx), ctx + ".t"));
            c.value = rat_from_json(get_required((*it)[i], "value", ctx), ctx + ".value");
            consts.push_back(std::move(c));
        }
        rep.structure_consts = std::move(consts);
    }
    return rep;
}

Json twist_to_json(const CharacterTwist& twist) {
    Json j;
    if (twist.symbolic) {
        j["symbolic"] = true;
    } else {
        j["chi"] = twist.chi;
        j["c"] = twist.c;
    }
    return j;
}

CharacterTwist twist_from_json(const Json& j) {
    check_keys(j, {"symbolic", "chi", "c"}, "twist");
    if (auto it = j.find("symbolic"); it != j.end()) {
        if (!it->is_boolean() || !it->get<bool>())
            fail("BadInput", "twist.symbolic: only 'true' is accepted");
        if (j.size() != 1) fail("BadInput", "twist: symbolic excludes chi and c");
        return CharacterTwist::well_adapted();
    }
    long long chi = get_integer(get_required(j, "chi", "twist"), "twist.chi");
    long long c = get_integer(get_required(j, "c", "twist"), "twist.c");
    return CharacterTwist::exact(chi, c);
}

Json input_to_json(const InputDocument& doc) {
    Json j;
    j["version"] = doc.version;
    j["rep"] = rep_to_json(doc.rep);
    if (doc.twist) j["twist"] = twist_to_json(*doc.twist);
    if (!doc.points.empty()) {
        Json pts = Json::array();
        for (const auto& p : doc.points) pts.push_back(vec_to_json(p));
        j["points"] = std::move(pts);
    }
    if (doc.probe_limit || doc.n_param || doc.m_max) {
        Json probe;
        if (doc.probe_limit) probe["K"] = *doc.probe_limit;
        if (doc.n_param) probe["n_param"] = *doc.n_param;
        if (doc.m_max) probe["m_max"] = *doc.m_max;
        j["probe"] = std::move(probe);
    }
    return j;
}

InputDocument input_from_json(const Json& j) {
    check_keys(j, {"version", "rep", "twist", "points", "probe"}, "input");
    InputDocument doc;
    doc.version = static_cast<int>(get_integer(get_required(j, "version", "input"), "input.version"));
    if (doc.version != kInputVersion)
        fail("BadInput", "input.version: unsupported version " + std::to_string(doc.version));
    doc.rep = rep_from_json(get_required(j, "rep", "input"));
    if (auto it = j.find("twist"); it != j.end()) doc.twist = twist_from_json(*it);
    if (auto it = j.find("points"); it != j.end()) {
        if (!it->is_array()) fail("BadInput", "input.points: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            std::string ctx = "input.points[" + std::to_string(i) + "]";
            std::vector<Rat> p = vec_from_json((*it)[i], ctx);
            if (p.size() != doc.rep.dim_v) fail("BadInput", ctx + ": length does not match dim_v");
            doc.points.push_back(std::move(p));
        }
    }
    if (auto it = j.find("probe"); it != j.end()) {
        check_keys(*it, {"K", "n_param", "m_max"}, "input.probe");
        if (auto k = it->find("K"); k != it->end())
            doc.probe_limit = static_cast<unsigned>(get_unsigned(*k, "input.probe.K"));
        if (auto n = it->find("n_param"); n != it->end())
            doc.n_param = get_integer(*n, "input.probe.n_param");
        if (auto m = it->find("m_max"); m != it->end())
            doc.m_max = static_cast<unsigned>(get_unsigned(*m, "input.probe.m_max"));
    }
    return doc;
}

InputDocument load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot open input file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail("BadInput", std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return input_from_json(j);
}

Json decomposition_to_json(const Sl2Decomposition& dec) {
    Json j;
    j["ell"] = dec.grade;
    Json blocks = Json::array();
    std::size_t col = 0;
    for (const Sl2Block& b : dec.blocks) {
        Json e;
        e["a"] = b.a;
        e["l"] = b.l;
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k <= b.l; ++k) idx.push_back(col++);
        e["chain_indices"] = idx;
        blocks.push_back(std::move(e));
    }
    j["blocks"] = std::move(blocks);
    j["basis_change"] = matrix_to_json(dec.basis_change);
    return j;
}

Json poly_to_json(const MPoly& f) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : f.terms()) {
        Json t;
        t["monomial"] = mono;
        t["coeff"] = rat_to_json(coeff);
        terms.push_back(std::move(t));
    }
    Json j;
    j["terms"] = std::move(terms);
    j["display"] = f.str();
    return j;
}

Json report_envelope(const std::string& command, Json input_echo, Json result) {
    Json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["input"] = std::move(input_echo);
    j["result"] = std::move(result);
    return j;
}

std::string to_text(const Json& j) { return j.dump(2) + "\n"; }

namespace {

bool is_scalar_array(const Json& j) {
    for (const auto& e : j)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

std::string scalar_str(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render_node(const Json& j, int indent, std::string& out) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const Json& v = it.value();
            if (v.is_object() || (v.is_array() && !is_scalar_array(v))) {
                out += pad + it.key() + ":\n";
                render_node(v, indent + 1, out);
            } else if (v.is_array()) {
                out += pad + it.key() + ": " + v.dump() + "\n";
            } else {
                out += pad + it.key() + ": " + scalar_str(v) + "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (e.is_array() && is_scalar_array(e)) {
                out += pad + "- " + e.dump() + "\n";
            } else if (e.is_object() || e.is_array()) {
                out += pad + "-\n";
                render_node(e, indent + 1, out);
            } else {
                out += pad + "- " + scalar_str(e) + "\n";
            }
        }
    } else {
        out += pad + scalar_str(j) + "\n";
    }
}

} // namespace

std::string render_text(const Json& j) {
    std::string out;
    render_node(j, 0, out);
    return out;
}

std::vector<Rat> parse_point_csv(const std::string& text) {
    std::vector<Rat> v;
    std::string cur;
    std::stringstream ss(text);
    while (std::getline(ss, cur, ',')) {
        if (cur.find_first_not_of(" \t") == std::string::npos)
            fail("BadInput", "empty entry in point list '" + text + "'");
        v.push_back(Rat::parse(cur));
    }
    if (v.empty()) fail("BadInput", "empty point list");
    return v;
}

MPoly parse_linear_section(const std::string& text, std::size_t dim) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() >= 2 && s[0] == 'x') {
        bool digits = true;
        for (std::size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) { digits = false; break; }
        if (digits) {
            unsigned long idx = 0;
            try {
                idx = std::stoul(s.substr(1));
            } catch (const std::exception&) {
                fail("BadInput", "coordinate index out of range in '" + text + "'");
            }
            if (idx < 1 || idx > dim)
                fail("BadInput", "coordinate index out of range in '" + text + "'");
            return MPoly::variable(dim, idx - 1);
        }
    }
    std::vector<Rat> coeffs = parse_point_csv(text);
    if (coeffs.size() != dim)
        fail("BadInput", "section needs " + std::to_string(dim) + " coefficients");
    MPoly f(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (coeffs[i].is_zero()) continue;
        f += MPoly::variable(dim, i).scaled(coeffs[i]);
    }
    return f;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("IoError", "cannot open output file: " + path);
    out << text;
    if (!out) fail("IoError", "write failed: " + path);
}

} // namespace ugit
