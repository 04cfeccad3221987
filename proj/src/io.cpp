#include "hamming/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hamming {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

int parse_int(const std::string& s) {
    Rat r = Rat::parse(trim(s));
    if (!r.is_integer()) throw invalid_input("expected an integer: " + s);
    return (int)r.num();
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input("cannot open file for writing: " + path);
    out << content;
}

YoungDiagram parse_zero_spec(const std::string& raw) {
    std::string spec = trim(raw);
    if (spec.empty()) throw invalid_input("empty zero-set spec");
    if (spec[0] == '@') return parse_zero_spec(read_file(spec.substr(1)));
    if (spec == "empty") return YoungDiagram();
    if (spec[0] == '{') {
        auto j = nlohmann::json::parse(spec, nullptr, false);
        if (j.is_discarded() || !j.contains("rows") || !j["rows"].is_array())
            throw invalid_input("bad diagram JSON");
        std::vector<int> rows;
        for (const auto& r : j["rows"]) rows.push_back(r.get<int>());
        return YoungDiagram::from_rows(rows);
    }
    if (spec.rfind("rect:", 0) == 0) {
        auto parts = split(spec.substr(5), 'x');
        if (parts.size() != 2) throw invalid_input("rect spec needs AxB");
        return YoungDiagram::rectangle(parse_int(parts[0]), parse_int(parts[1]));
    }
    if (spec.rfind("tri:", 0) == 0) return YoungDiagram::triangle(parse_int(spec.substr(4)));
    if (spec.rfind("lshape:", 0) == 0) {
        auto parts = split(spec.substr(7), ',');
        if (parts.size() != 4) throw invalid_input("lshape spec needs a,b,c,d");
        return YoungDiagram::lshape(parse_int(parts[0]), parse_int(parts[1]),
                                    parse_int(parts[2]), parse_int(parts[3]));
    }
    std::vector<int> rows;
    for (const auto& part : split(spec, ',')) rows.push_back(parse_int(part));
    return YoungDiagram::from_rows(rows);
}

PointSet parse_pointset_text(const std::string& text) {
    std::string t = trim(text);
    if (!t.empty() && t[0] == '{') {
        auto j = nlohmann::json::parse(t, nullptr, false);
        if (j.is_discarded() || !j.contains("box") || !j.contains("points"))
            throw invalid_input("bad point-set JSON");
        std::vector<Cell> pts;
        for (const auto& p : j["points"]) pts.push_back({p[0].get<int>(), p[1].get<int>()});
        return PointSet::in_box(j["box"][0].get<int>(), j["box"][1].get<int>(), pts);
    }
    std::istringstream in(text);
    std::string line;
    int n = -1, m = -1;
    std::vector<Cell> pts;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream h(line.substr(1));
            std::string word;
            h >> word;
            if (word == "box") {
                if (!(h >> n >> m)) throw invalid_input("bad box header");
            }
            continue;
        }
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw invalid_input("bad point line: " + line);
        pts.push_back({u, v});
    }
    if (n < 0 || m < 0) {
        n = m = 0;
        for (const Cell& c : pts) {
            n = std::max(n, c.u + 1);
            m = std::max(m, c.v + 1);
        }
    }
    return PointSet::in_box(n, m, pts);
}

std::string pointset_to_text(const PointSet& a) {
    std::ostringstream out;
    out << "# box " << a.box_n << " " << a.box_m << "\n";
    for (const Cell& c : a.points) out << c.u << " " << c.v << "\n";
    return out.str();
}

std::string diagram_to_json(const YoungDiagram& z) {
    nlohmann::json j;
    j["rows"] = z.rows();
    return j.dump();
}

std::string pointset_to_json(const PointSet& a) {
    nlohmann::json j;
    j["box"] = {a.box_n, a.box_m};
    auto pts = nlohmann::json::array();
    for (const Cell& c : a.points) pts.push_back({c.u, c.v});
    j["points"] = pts;
    return j.dump();
}

EuclideanZeroSet parse_euclid_spec(const std::string& raw) {
    std::string spec = trim(raw);
    if (spec.rfind("rect:", 0) == 0) {
        auto parts = split(spec.substr(5), 'x');
        if (parts.size() != 2) throw invalid_input("rect spec needs AxB");
        return EuclideanZeroSet::rectangle(Rat::parse(parts[0]), Rat::parse(parts[1]));
    }
    if (spec.rfind("lshape:", 0) == 0)
        return EuclideanZeroSet::lshape(Rat::parse(spec.substr(7)));
    if (spec == "rost") return EuclideanZeroSet::rost();
    if (spec.rfind("vershik:", 0) == 0)
        return EuclideanZeroSet::vershik(Rat::parse(spec.substr(8)));
    if (spec == "vershik") return EuclideanZeroSet::vershik(Rat(4));
    if (spec.rfind("staircase:", 0) == 0) {
        std::vector<std::pair<Rat, Rat>> steps;
        for (const auto& corner : split(spec.substr(10), ';')) {
            auto xy = split(corner, ',');
            if (xy.size() != 2) throw invalid_input("staircase corner needs x,y");
            steps.push_back({Rat::parse(xy[0]), Rat::parse(xy[1])});
        }
        return EuclideanZeroSet::staircase(std::move(steps));
    }
    throw invalid_input("unknown shape spec: " + spec);
}

}  // namespace hamming
