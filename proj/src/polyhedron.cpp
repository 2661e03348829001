#include "sparsecuts/polyhedron.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sparsecuts {

int row_cmp(const LinRow& r, const LinRow& s) {
    int c = lex_cmp(r.a, s.a);
    if (c != 0) return c;
    if (r.b < s.b) return -1;
    if (r.b > s.b) return 1;
    return 0;
}

bool row_less(const LinRow& r, const LinRow& s) { return row_cmp(r, s) < 0; }

void canonicalize_ineq(LinRow& r) {
    if (is_zero_vec(r.a)) {
        r.b = Rat(sgn(r.b));
        return;
    }
    Rat s = primitive_scale_factor(r.a);
    r.a = vec_scaled(r.a, s);
    r.b *= s;
}

void canonicalize_eq(LinRow& r) {
    if (is_zero_vec(r.a)) {
        r.b = Rat(sgn(r.b) == 0 ? 0 : 1);
        return;
    }
    Rat s = primitive_scale_factor(r.a);
    for (const Rat& x : r.a) {
        if (x != 0) {
            if (x < 0) s = -s;
            break;
        }
    }
    r.a = vec_scaled(r.a, s);
    r.b *= s;
}

void VRep::validate() const {
    if (dim <= 0) throw std::invalid_argument("VRep: dim must be positive");
    if (vertices.empty()) throw std::invalid_argument("VRep: vertex list is empty");
    for (const auto& v : vertices)
        if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("VRep: vertex dimension mismatch");
    for (const auto& l : lineality) {
        if (static_cast<int>(l.size()) != dim) throw std::invalid_argument("VRep: lineality dimension mismatch");
        if (is_zero_vec(l)) throw std::invalid_argument("VRep: zero lineality generator");
    }
}

void VRep::normalize() {
    std::sort(vertices.begin(), vertices.end(), [](const RatVec& a, const RatVec& b) { return lex_cmp(a, b) < 0; });
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<RatVec> lines;
    for (auto& l : lineality) {
        if (is_zero_vec(l)) continue;
        LinRow tmp{l, Rat(0)};
        canonicalize_eq(tmp);
        lines.push_back(tmp.a);
    }
    std::sort(lines.begin(), lines.end(), [](const RatVec& a, const RatVec& b) { return lex_cmp(a, b) < 0; });
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    lineality = std::move(lines);
}

void HRep::validate() const {
    if (dim <= 0) throw std::invalid_argument("HRep: dim must be positive");
    for (const auto& r : inequalities)
        if (r.dim() != dim) throw std::invalid_argument("HRep: inequality dimension mismatch");
    for (const auto& r : equations)
        if (r.dim() != dim) throw std::invalid_argument("HRep: equation dimension mismatch");
}

void HRep::normalize() {
    std::vector<LinRow> ineqs, eqs;
    for (auto& r : inequalities) {
        canonicalize_ineq(r);
        if (is_zero_vec(r.a)) {
            if (r.b < 0) infeasible = true;
            continue;  // 0 <= b with b >= 0 is vacuous
        }
        ineqs.push_back(r);
    }
    for (auto& r : equations) {
        canonicalize_eq(r);
        if (is_zero_vec(r.a)) {
            if (r.b != 0) infeasible = true;
            continue;
        }
        eqs.push_back(r);
    }
    std::sort(ineqs.begin(), ineqs.end(), row_less);
    ineqs.erase(std::unique(ineqs.begin(), ineqs.end()), ineqs.end());
    // identical normals: keep only the tightest right-hand side
    std::vector<LinRow> kept;
    for (auto& r : ineqs) {
        if (!kept.empty() && kept.back().a == r.a) continue;  // rows sorted, smaller b first
        kept.push_back(std::move(r));
    }
    std::sort(eqs.begin(), eqs.end(), row_less);
    eqs.erase(std::unique(eqs.begin(), eqs.end()), eqs.end());
    inequalities = std::move(kept);
    equations = std::move(eqs);
    if (infeasible) *this = canonical_infeasible(dim);
}

bool HRep::satisfied_by(const RatVec& x) const {
    if (static_cast<int>(x.size()) != dim) throw std::invalid_argument("satisfied_by: dimension mismatch");
    if (infeasible) return false;
    for (const auto& r : inequalities)
        if (r.eval(x) > r.b) return false;
    for (const auto& r : equations)
        if (r.eval(x) != r.b) return false;
    return true;
}

HRep HRep::canonical_infeasible(int dim) {
    HRep h;
    h.dim = dim;
    h.infeasible = true;
    h.inequalities.push_back(LinRow{zero_vec(dim), Rat(-1)});
    return h;
}

Box Box::unit(int dim) { return Box{zero_vec(dim), ones_vec(dim)}; }

Box Box::symmetric(int dim) {
    return Box{RatVec(static_cast<std::size_t>(dim), Rat(-1)), ones_vec(dim)};
}

std::vector<LinRow> Box::rows() const {
    std::vector<LinRow> out;
    int n = dim();
    for (int i = 0; i < n; ++i) {
        RatVec neg = zero_vec(n);
        neg[static_cast<std::size_t>(i)] = -1;
        out.push_back(LinRow{neg, -lo[static_cast<std::size_t>(i)]});  // -x_i <= -lo_i
        out.push_back(LinRow{unit_vec(n, i), hi[static_cast<std::size_t>(i)]});
    }
    return out;
}

bool Box::contains(const RatVec& x) const {
    for (std::size_t i = 0; i < lo.size(); ++i)
        if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
}

// ---- JSON ----

namespace {

using nlohmann::json;

json vec_to_json(const RatVec& v) {
    json arr = json::array();
    for (const Rat& x : v) arr.push_back(rat_str(x));
    return arr;
}

RatVec vec_from_json(const json& arr) {
    RatVec v;
    for (const auto& e : arr) v.push_back(parse_rat(e.get<std::string>()));
    return v;
}

}  // namespace

std::string vrep_to_json(const VRep& v) {
    json j;
    j["dim"] = v.dim;
    j["vertices"] = json::array();
    for (const auto& p : v.vertices) j["vertices"].push_back(vec_to_json(p));
    j["lineality"] = json::array();
    for (const auto& l : v.lineality) j["lineality"].push_back(vec_to_json(l));
    return j.dump(2);
}

VRep vrep_from_json(const std::string& text) {
    json j = json::parse(text);
    VRep v;
    v.dim = j.at("dim").get<int>();
    for (const auto& p : j.at("vertices")) v.vertices.push_back(vec_from_json(p));
    if (j.contains("lineality"))
        for (const auto& l : j["lineality"]) v.lineality.push_back(vec_from_json(l));
    v.validate();
    return v;
}

std::string hrep_to_json(const HRep& h) {
    json j;
    j["dim"] = h.dim;
    auto rows = [](const std::vector<LinRow>& rs) {
        json arr = json::array();
        for (const auto& r : rs) arr.push_back(json{{"a", vec_to_json(r.a)}, {"b", rat_str(r.b)}});
        return arr;
    };
    j["inequalities"] = rows(h.inequalities);
    j["equations"] = rows(h.equations);
    j["infeasible"] = h.infeasible;
    return j.dump(2);
}

HRep hrep_from_json(const std::string& text) {
    json j = json::parse(text);
    HRep h;
    h.dim = j.at("dim").get<int>();
    auto rows = [](const json& arr) {
        std::vector<LinRow> rs;
        for (const auto& e : arr) rs.push_back(LinRow{vec_from_json(e.at("a")), parse_rat(e.at("b").get<std::string>())});
        return rs;
    };
    if (j.contains("inequalities")) h.inequalities = rows(j["inequalities"]);
    if (j.contains("equations")) h.equations = rows(j["equations"]);
    if (j.contains("infeasible")) h.infeasible = j["infeasible"].get<bool>();
    h.validate();
    return h;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text << "\n";
}

}  // namespace

VRep load_vrep(const std::string& path) { return vrep_from_json(read_file(path)); }
HRep load_hrep(const std::string& path) { return hrep_from_json(read_file(path)); }
void save_vrep(const VRep& v, const std::string& path) { write_file(path, vrep_to_json(v)); }
void save_hrep(const HRep& h, const std::string& path) { write_file(path, hrep_to_json(h)); }

}  // namespace sparsecuts
