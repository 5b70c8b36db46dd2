#include "pinchgeo/app/manifold_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pinchgeo::app {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

class EntryReader {
public:
    EntryReader(const json& node, std::string where) : node_(node), where_(std::move(where)) {}

    [[noreturn]] void fail(const std::string& what) const { throw FileError(where_ + ": " + what, 0, 0); }

    void allow_only(const std::set<std::string>& keys) const {
        for (const auto& [key, value] : node_.items()) {
            if (!keys.contains(key)) {
                fail("unknown key '" + key + "'");
            }
        }
    }

    bool has(const std::string& key) const { return node_.contains(key); }

    const json& at(const std::string& key) const {
        if (!node_.contains(key)) {
            fail("missing key '" + key + "'");
        }
        return node_.at(key);
    }

    double number(const std::string& key) const {
        const json& v = at(key);
        if (!v.is_number()) {
            fail("'" + key + "' must be a number");
        }
        return v.get<double>();
    }

    int integer(const std::string& key) const {
        const json& v = at(key);
        if (!v.is_number_integer()) {
            fail("'" + key + "' must be an integer");
        }
        return v.get<int>();
    }

    std::string string(const std::string& key) const {
        const json& v = at(key);
        if (!v.is_string()) {
            fail("'" + key + "' must be a string");
        }
        return v.get<std::string>();
    }

    bool boolean(const std::string& key, bool fallback) const {
        if (!has(key)) {
            return fallback;
        }
        const json& v = node_.at(key);
        if (!v.is_boolean()) {
            fail("'" + key + "' must be true or false");
        }
        return v.get<bool>();
    }

    const std::string& where() const { return where_; }

private:
    const json& node_;
    std::string where_;
};

std::vector<int> read_grid(const EntryReader& r, int n, int fallback) {
    if (!r.has("grid")) {
        return std::vector<int>(static_cast<std::size_t>(n), fallback);
    }
    const json& g = r.at("grid");
    if (g.is_number_integer()) {
        return std::vector<int>(static_cast<std::size_t>(n), g.get<int>());
    }
    if (!g.is_array() || g.size() != static_cast<std::size_t>(n)) {
        r.fail("'grid' must be an integer or an array of n integers");
    }
    std::vector<int> out;
    for (const auto& v : g) {
        if (!v.is_number_integer()) {
            r.fail("'grid' entries must be integers");
        }
        out.push_back(v.get<int>());
    }
    return out;
}

ModelEntry read_model(const EntryReader& r) {
    r.allow_only({"model", "n", "r", "H0", "lambda", "numeric", "grid"});
    const std::string kind = r.string("model");
    const int n = r.integer("n");
    ModelEntry e;
    if (kind == "round_sphere") {
        e.model = RoundSphere{n, r.has("r") ? r.number("r") : 1.0};
    } else if (kind == "cylinder") {
        e.model = SphericalCylinder{n, r.number("H0")};
    } else if (kind == "clifford") {
        e.model = CliffordProduct{n, r.number("lambda")};
    } else {
        r.fail("unknown model '" + kind + "' (expected round_sphere, cylinder or clifford)");
    }
    e.numeric = r.boolean("numeric", false);
    if (r.has("grid")) {
        const std::vector<int> g = read_grid(r, 1, 5);
        e.grid = g.front();
    }
    try {
        validate(e.model);
    } catch (const std::invalid_argument& ex) {
        r.fail(ex.what());
    }
    return e;
}

ImmersionSpec read_immersion(const EntryReader& r) {
    r.allow_only({"immersion", "box", "grid", "ambient", "name", "n"});
    const json& map = r.at("immersion");
    if (!map.is_array() || map.empty()) {
        r.fail("'immersion' must be a nonempty array of expression strings");
    }
    std::vector<std::string> components;
    for (const auto& v : map) {
        if (!v.is_string()) {
            r.fail("'immersion' components must be strings");
        }
        components.push_back(v.get<std::string>());
    }

    const json& box = r.at("box");
    if (!box.is_array() || box.empty()) {
        r.fail("'box' must be a nonempty array of [lo, hi] pairs");
    }
    std::vector<Interval> intervals;
    for (const auto& iv : box) {
        if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number()) {
            r.fail("'box' entries must be [lo, hi] number pairs");
        }
        intervals.push_back({iv[0].get<double>(), iv[1].get<double>()});
    }
    const int n = static_cast<int>(intervals.size());
    if (r.has("n") && r.integer("n") != n) {
        r.fail("'n' does not match the number of box intervals");
    }

    double c = 0.0;
    if (r.has("ambient")) {
        const json& amb = r.at("ambient");
        if (!amb.is_object()) {
            r.fail("'ambient' must be an object such as {\"c\": 1}");
        }
        const EntryReader ar(amb, r.where() + ".ambient");
        ar.allow_only({"c"});
        c = ar.number("c");
    }

    std::vector<int> grid = read_grid(r, n, 5);
    const std::string name = r.has("name") ? r.string("name") : std::string{};
    AmbientSpec ambient = AmbientSpec::space_form(0.0);
    try {
        ambient = AmbientSpec::space_form(c);
    } catch (const std::invalid_argument& ex) {
        r.fail(ex.what());
    }
    for (std::size_t k = 0; k < components.size(); ++k) {
        try {
            (void)Expression::parse(components[k]);
        } catch (const ParseError& ex) {
            r.fail("immersion component " + std::to_string(k + 1) + ": " + ex.what());
        }
    }
    try {
        return ImmersionSpec::from_strings(n, ambient, components, std::move(intervals), std::move(grid), name);
    } catch (const std::invalid_argument& ex) {
        r.fail(ex.what());
    }
}

FileOptions read_options(const json& node) {
    const EntryReader r(node, "options");
    if (!node.is_object()) {
        r.fail("must be an object");
    }
    r.allow_only({"seed", "budget", "step"});
    FileOptions o;
    if (r.has("seed")) {
        const json& s = r.at("seed");
        if (!s.is_number_unsigned()) {
            r.fail("'seed' must be a nonnegative integer");
        }
        o.seed = s.get<std::uint64_t>();
    }
    if (r.has("budget")) {
        o.budget = r.integer("budget");
        if (o.budget < 1) {
            r.fail("'budget' must be >= 1");
        }
    }
    if (r.has("step")) {
        o.step = r.number("step");
        if (o.step < 0.0) {
            r.fail("'step' must be >= 0");
        }
    }
    return o;
}

}  // namespace

ManifoldFile parse_manifold_file(std::string_view text) {
    if (std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isspace(ch) != 0; })) {
        throw EmptyFileError();
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& ex) {
        const auto [line, column] = line_column(text, ex.byte);
        std::string what = ex.what();
        // Drop the library prefix "[json.exception.parse_error.101] parse error at line L, column C: ".
        if (const auto pos = what.find(": "); pos != std::string::npos) {
            what = what.substr(pos + 2);
        }
        throw FileError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what, line,
                        column);
    }

    const EntryReader top(doc, "file");
    if (!doc.is_object()) {
        top.fail("top level must be an object with an \"entries\" array");
    }
    top.allow_only({"options", "entries"});
    ManifoldFile file;
    if (top.has("options")) {
        file.options = read_options(doc.at("options"));
    }
    const json& entries = top.at("entries");
    if (!entries.is_array()) {
        top.fail("'entries' must be an array");
    }
    if (entries.empty()) {
        throw EmptyFileError();
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const EntryReader r(entries[i], "entry " + std::to_string(i + 1));
        if (!entries[i].is_object()) {
            r.fail("must be an object");
        }
        if (r.has("model") == r.has("immersion")) {
            r.fail("needs exactly one of 'model' or 'immersion'");
        }
        if (r.has("model")) {
            file.entries.emplace_back(read_model(r));
        } else {
            file.entries.emplace_back(read_immersion(r));
        }
    }
    return file;
}

ManifoldFile load_manifold_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifold_file(buf.str());
}

}  // namespace pinchgeo::app
