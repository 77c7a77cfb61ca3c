#include "casimir/optical_table.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "casimir/error.hpp"

namespace casimir {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',' || ch == ' ' || ch == '\t' || ch == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

bool parse_double(const std::string& s, double& v) {
    try {
        size_t pos = 0;
        v = std::stod(s, &pos);
        return pos == s.size() && std::isfinite(v);
    } catch (const std::exception&) {
        return false;
    }
}

std::string frequency_column_name(FrequencyUnit u) {
    switch (u) {
        case FrequencyUnit::ev: return "omega_eV";
        case FrequencyUnit::radps: return "omega_radps";
        case FrequencyUnit::micrometers_wavelength: return "lambda_um";
    }
    return "";
}

std::vector<std::string> expected_header(FrequencyUnit u, ColumnLayout c) {
    std::vector<std::string> h{frequency_column_name(u)};
    switch (c) {
        case ColumnLayout::omega_eps2: h.push_back("eps2"); break;
        case ColumnLayout::omega_n_k: h.push_back("n"); h.push_back("k"); break;
        case ColumnLayout::omega_eps1_eps2:
            h.push_back("eps1");
            h.push_back("eps2");
            break;
    }
    return h;
}

struct HeaderInfo {
    std::vector<std::string> names;
    std::string source;
    size_t line_no = 0;
};

// Reads comment lines (capturing "# source: ..." provenance) and the header row.
HeaderInfo read_header(std::istream& in) {
    HeaderInfo info;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty()) continue;
        if (fields[0][0] == '#') {
            const std::string kSrc = "source:";
            auto pos = line.find(kSrc);
            if (pos != std::string::npos) {
                auto text = line.substr(pos + kSrc.size());
                while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
                    text.erase(text.begin());
                while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
                    text.pop_back();
                if (!info.source.empty()) info.source += "; ";
                info.source += text;
            }
            continue;
        }
        info.names = std::move(fields);
        info.line_no = line_no;
        return info;
    }
    fail(ErrorCode::empty_table, "no header row found");
}

OpticalTable parse_with_header(std::istream& in, FrequencyUnit unit, ColumnLayout layout,
                               const HeaderInfo& header, const std::string& material,
                               const PhysicalConstants& pc) {
    const auto expected = expected_header(unit, layout);
    if (header.names != expected) {
        std::string want;
        for (const auto& n : expected) want += n + " ";
        std::string got;
        for (const auto& n : header.names) got += n + " ";
        fail(ErrorCode::malformed_row,
             "header row [" + got + "] does not match declared columns [" + want + "]");
    }

    OpticalTable table;
    table.material = material;
    table.source = header.source;

    std::string line;
    size_t line_no = header.line_no;
    while (std::getline(in, line)) {
        ++line_no;
        auto fields = split_fields(line);
        if (fields.empty() || fields[0][0] == '#') continue;
        if (fields.size() != expected.size())
            fail(ErrorCode::malformed_row, "line " + std::to_string(line_no) + ": expected " +
                                               std::to_string(expected.size()) +
                                               " fields, got " + std::to_string(fields.size()));
        std::vector<double> v(fields.size());
        for (size_t i = 0; i < fields.size(); ++i)
            if (!parse_double(fields[i], v[i]))
                fail(ErrorCode::malformed_row,
                     "line " + std::to_string(line_no) + ": bad number '" + fields[i] + "'");

        double omega = v[0];
        switch (unit) {
            case FrequencyUnit::ev: break;
            case FrequencyUnit::radps: omega /= pc.ev_to_radps; break;
            case FrequencyUnit::micrometers_wavelength:
                if (omega <= 0.0)
                    fail(ErrorCode::negative_value,
                         "line " + std::to_string(line_no) + ": wavelength must be positive");
                omega = pc.ev_from_lambda_um(omega);
                break;
        }

        double eps2 = 0.0;
        switch (layout) {
            case ColumnLayout::omega_eps2: eps2 = v[1]; break;
            case ColumnLayout::omega_n_k: {
                if (v[1] < 0.0 || v[2] < 0.0)
                    fail(ErrorCode::negative_value,
                         "line " + std::to_string(line_no) + ": n and k must be nonnegative");
                eps2 = nk_to_eps(v[1], v[2]).second;
                break;
            }
            case ColumnLayout::omega_eps1_eps2: eps2 = v[2]; break;
        }

        if (omega <= 0.0)
            fail(ErrorCode::negative_value,
                 "line " + std::to_string(line_no) + ": omega must be positive");
        if (eps2 < 0.0)
            fail(ErrorCode::negative_value,
                 "line " + std::to_string(line_no) + ": eps2 must be nonnegative");
        table.samples.push_back({omega, eps2});
    }

    if (table.samples.size() < 2)
        fail(ErrorCode::empty_table,
             "need at least 2 data rows, got " + std::to_string(table.samples.size()));

    std::stable_sort(table.samples.begin(), table.samples.end(),
                     [](const OpticalSample& a, const OpticalSample& b) {
                         return a.omega < b.omega;
                     });
    for (size_t i = 1; i < table.samples.size(); ++i)
        if (!(table.samples[i - 1].omega < table.samples[i].omega))
            fail(ErrorCode::non_monotonic,
                 "duplicate omega = " + std::to_string(table.samples[i].omega) + " eV");
    return table;
}

}  // namespace

std::pair<double, double> nk_to_eps(double n, double k) {
    return {n * n - k * k, 2.0 * n * k};
}

OpticalTable parse_table(std::istream& in, FrequencyUnit unit, ColumnLayout layout,
                         const std::string& material, const PhysicalConstants& pc) {
    return parse_with_header(in, unit, layout, read_header(in), material, pc);
}

OpticalTable parse_table_auto(std::istream& in, const std::string& material,
                              const PhysicalConstants& pc) {
    auto header = read_header(in);
    if (header.names.empty()) fail(ErrorCode::empty_table, "missing header row");

    FrequencyUnit unit;
    if (header.names[0] == "omega_eV") unit = FrequencyUnit::ev;
    else if (header.names[0] == "omega_radps") unit = FrequencyUnit::radps;
    else if (header.names[0] == "lambda_um") unit = FrequencyUnit::micrometers_wavelength;
    else fail(ErrorCode::malformed_row, "unknown frequency column '" + header.names[0] + "'");

    ColumnLayout layout;
    const auto rest = std::vector<std::string>(header.names.begin() + 1, header.names.end());
    if (rest == std::vector<std::string>{"eps2"}) layout = ColumnLayout::omega_eps2;
    else if (rest == std::vector<std::string>{"n", "k"}) layout = ColumnLayout::omega_n_k;
    else if (rest == std::vector<std::string>{"eps1", "eps2"})
        layout = ColumnLayout::omega_eps1_eps2;
    else fail(ErrorCode::malformed_row, "unrecognized column set in header");

    return parse_with_header(in, unit, layout, header, material, pc);
}

OpticalTable load_table_file(const std::string& path, const std::string& material) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::io_error, "cannot open '" + path + "'");
    auto table = parse_table_auto(in, material);
    if (table.source.empty()) table.source = path;
    return table;
}

void serialize_table(const OpticalTable& table, std::ostream& out) {
    if (!table.source.empty()) out << "# source: " << table.source << "\n";
    out << "omega_eV eps2\n";
    char buf[64];
    for (const auto& s : table.samples) {
        std::snprintf(buf, sizeof(buf), "%.16e %.16e\n", s.omega, s.eps2);
        out << buf;
    }
}

std::string serialize_table(const OpticalTable& table) {
    std::ostringstream ss;
    serialize_table(table, ss);
    return ss.str();
}

const char* to_string(FrequencyUnit u) {
    switch (u) {
        case FrequencyUnit::ev: return "eV";
        case FrequencyUnit::radps: return "rad/s";
        case FrequencyUnit::micrometers_wavelength: return "um";
    }
    return "";
}

const char* to_string(ColumnLayout c) {
    switch (c) {
        case ColumnLayout::omega_eps2: return "omega_eps2";
        case ColumnLayout::omega_n_k: return "omega_n_k";
        case ColumnLayout::omega_eps1_eps2: return "omega_eps1_eps2";
    }
    return "";
}

FrequencyUnit frequency_unit_from_string(const std::string& s) {
    if (s == "eV" || s == "ev") return FrequencyUnit::ev;
    if (s == "rad/s" || s == "radps") return FrequencyUnit::radps;
    if (s == "um" || s == "micrometers_wavelength") return FrequencyUnit::micrometers_wavelength;
    fail(ErrorCode::invalid_argument, "unknown frequency unit '" + s + "'");
}

ColumnLayout column_layout_from_string(const std::string& s) {
    if (s == "omega_eps2") return ColumnLayout::omega_eps2;
    if (s == "omega_n_k") return ColumnLayout::omega_n_k;
    if (s == "omega_eps1_eps2") return ColumnLayout::omega_eps1_eps2;
    fail(ErrorCode::invalid_argument, "unknown column layout '" + s + "'");
}

}  // namespace casimir
