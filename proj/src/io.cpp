#include "spherequant/io.hpp"

#include <fstream>
#include <sstream>

namespace spherequant {

using nlohmann::json;

json measure_to_json(const DiscreteMeasure& mu) {
    json j;
    j["rho"] = mu.rho();
    auto& pts = j["points"] = json::array();
    for (const auto& p : mu.points) pts.push_back({p.x, p.y, p.z});
    j["weights"] = mu.weights;
    return j;
}

DiscreteMeasure measure_from_json(const json& j) {
    const double rho = j.at("rho").get<double>();
    std::vector<SpherePoint> pts;
    for (const auto& row : j.at("points")) {
        if (!row.is_array() || row.size() != 3)
            throw std::invalid_argument("each point must be an [x, y, z] triple");
        pts.emplace_back(row[0].get<double>(), row[1].get<double>(), row[2].get<double>(), rho);
    }
    return make_measure(std::move(pts), j.at("weights").get<std::vector<double>>());
}

json result_to_json(const QuantizationResult& res, double rho) {
    json j;
    j["rho"] = rho;
    auto& cps = j["codepoints"] = json::array();
    for (const auto& a : res.codebook.codepoints) cps.push_back({a.x, a.y, a.z});
    j["assignment"] = res.partition.assignment;
    j["distortion"] = res.distortion;
    j["seed"] = res.seed;
    j["iterations"] = res.iterations;
    j["converged"] = res.converged;
    return j;
}

json support_to_json(const CurveSupport& c) {
    json j;
    j["rho"] = c.rho();
    switch (c.kind()) {
        case SupportKind::GreatCircle: j["kind"] = "great_circle"; break;
        case SupportKind::SmallCircle:
            j["kind"] = "small_circle";
            j["latitude"] = c.latitude();
            break;
        case SupportKind::GreatArc:
            j["kind"] = "great_arc";
            j["length"] = c.length();
            break;
    }
    return j;
}

CurveSupport support_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const double rho = j.value("rho", 1.0);
    if (kind == "great_circle") return CurveSupport::great_circle(rho);
    if (kind == "small_circle")
        return CurveSupport::small_circle(j.at("latitude").get<double>(), rho);
    if (kind == "great_arc") return CurveSupport::great_arc(j.at("length").get<double>(), rho);
    throw std::invalid_argument("unknown support kind: " + kind);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        const auto a = field.find_first_not_of(" \t\r");
        const auto b = field.find_last_not_of(" \t\r");
        out.push_back(a == std::string::npos ? "" : field.substr(a, b - a + 1));
    }
    return out;
}

}  // namespace

ErrorSequence error_sequence_from_csv(const std::string& text, double default_r) {
    std::stringstream ss(text);
    std::string line;
    if (!std::getline(ss, line)) throw std::invalid_argument("empty CSV");
    auto header = split_csv_line(line);
    int n_col = -1, v_col = -1, r_col = -1;
    for (int i = 0; i < int(header.size()); ++i) {
        if (header[i] == "n") n_col = i;
        else if (header[i] == "V" || header[i] == "V_n" || header[i] == "v") v_col = i;
        else if (header[i] == "r") r_col = i;
    }
    if (n_col < 0 || v_col < 0)
        throw std::invalid_argument("CSV header must name columns n and V (or V_n)");

    std::vector<ErrorEntry> entries;
    while (std::getline(ss, line)) {
        if (line.empty() || line == "\r") continue;
        auto row = split_csv_line(line);
        if (int(row.size()) <= std::max(n_col, v_col))
            throw std::invalid_argument("CSV row has too few columns: " + line);
        ErrorEntry e{};
        e.n = std::stoll(row[n_col]);
        e.v = std::stod(row[v_col]);
        e.r = r_col >= 0 && r_col < int(row.size()) ? std::stod(row[r_col]) : default_r;
        entries.push_back(e);
    }
    return make_error_sequence(std::move(entries));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << text;
}

}  // namespace spherequant
