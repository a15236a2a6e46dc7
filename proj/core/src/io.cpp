#include "fermidec/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace fermidec::io {

namespace {

using nlohmann::json;

Vector6 parse_amplitudes(const json& j) {
    if (!j.is_array() || j.size() != 6) {
        throw BadLength("\"amplitudes\" must be an array of 6 entries");
    }
    Vector6 a;
    for (int i = 0; i < 6; ++i) {
        const json& e = j[static_cast<std::size_t>(i)];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw Error("amplitude entries must be [re, im] number pairs");
        }
        a(i) = Complex(e[0].get<double>(), e[1].get<double>());
    }
    return a;
}

}  // namespace

AngMomState parse_state_json(const std::string& text, double* norm_deviation) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("basis") || !j.contains("amplitudes")) {
        throw Error("state file needs \"basis\" and \"amplitudes\" keys");
    }
    const std::string basis = j["basis"].get<std::string>();
    const Vector6 raw = parse_amplitudes(j["amplitudes"]);
    if (norm_deviation) *norm_deviation = std::abs(raw.norm() - 1.0);

    if (basis == "angmom") return make_state(raw);
    if (basis == "slater") return from_slater(SlaterState{raw});
    throw Error("unknown basis \"" + basis + "\" (expected \"angmom\" or \"slater\")");
}

AngMomState read_state_json(const std::filesystem::path& path, double* norm_deviation) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open state file " + path.string());
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_state_json(buffer.str(), norm_deviation);
}

std::string state_to_json(const AngMomState& state, BasisTag basis) {
    const char* name = nullptr;
    Vector6 v;
    switch (basis) {
        case BasisTag::AngMom:
            name = "angmom";
            v = state.alpha;
            break;
        case BasisTag::Slater:
            name = "slater";
            v = to_slater(state).s;
            break;
        case BasisTag::BTilde:
            throw std::invalid_argument("state files carry angmom or slater expansions only");
    }
    std::string out = "{\"basis\": \"";
    out += name;
    out += "\", \"amplitudes\": [";
    for (int i = 0; i < 6; ++i) {
        if (i > 0) out += ", ";
        out += "[" + format_sig(v(i).real(), 17) + ", " + format_sig(v(i).imag(), 17) + "]";
    }
    out += "]}\n";
    return out;
}

void write_state_json(const AngMomState& state, const std::filesystem::path& path,
                      BasisTag basis) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot write state file " + path.string());
    file << state_to_json(state, basis);
}

std::string timeseries_csv(const std::vector<SeriesRow>& rows, bool with_p) {
    std::string out = with_p ? "t,p,Cf,K,SvN,purity\n" : "t,Cf,K,SvN,purity\n";
    for (const SeriesRow& row : rows) {
        out += format_sig(row.t, 12);
        if (with_p) out += "," + format_sig(row.p.value_or(0.0), 12);
        out += "," + format_sig(row.cf, 12);
        out += "," + format_sig(row.coherence, 12);
        out += "," + format_sig(row.entropy, 12);
        out += "," + format_sig(row.purity, 12);
        out += "\n";
    }
    return out;
}

std::string atlas_csv(const std::vector<PersistenceRecord>& records) {
    std::string out = "x,y,z,cf0,cf_inf,P\n";
    for (const PersistenceRecord& rec : records) {
        out += format_sig(rec.x, 12);
        out += "," + format_sig(rec.y, 12);
        out += "," + format_sig(rec.z, 12);
        out += "," + format_sig(rec.cf0, 12);
        out += "," + format_sig(rec.cf_inf, 12);
        out += ",";
        if (rec.p_ratio) out += format_sig(*rec.p_ratio, 12);
        out += "\n";
    }
    return out;
}

std::string format_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string fnv1a64_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

}  // namespace fermidec::io
