#include "universo/json_io.hpp"
#include "universo/errors.hpp"
#include "universo/graph6.hpp"

#include <fstream>
#include <sstream>

namespace universo {

namespace {

std::vector<std::vector<int>> int_lists(const json& j, const char* what) {
    if (!j.is_array())
        throw parameter_error(std::string("json: ") + what + " must be an array");
    std::vector<std::vector<int>> out;
    for (const auto& row : j)
        out.push_back(row.get<std::vector<int>>());
    return out;
}

} // namespace

json to_json(const VertexMap& m) { return json{{"image", m.image}}; }

VertexMap vertex_map_from_json(const json& j) {
    VertexMap m;
    m.image = j.at("image").get<std::vector<int>>();
    return m;
}

json to_json(const Coloring& c) {
    return json{{"classes", c.classes}, {"deleted", c.deleted}};
}

Coloring coloring_from_json(const json& j) {
    return Coloring::of(int_lists(j.at("classes"), "classes"),
                        j.value("deleted", std::vector<int>{}));
}

json to_json(const PathDecomposition& d) {
    return json{{"bags", d.bags}, {"width", d.width}, {"nice", d.nice}};
}

PathDecomposition decomposition_from_json(const json& j) {
    PathDecomposition d = PathDecomposition::of(int_lists(j.at("bags"), "bags"),
                                                j.value("nice", false));
    if (j.contains("width") && j.at("width").get<int>() != d.width)
        throw parameter_error("json: recorded width does not match the bags");
    return d;
}

json to_json(const CliquePacking& p) {
    return json{{"s", p.s}, {"k", p.k}, {"blocks", p.blocks}};
}

CliquePacking packing_from_json(const json& j) {
    return CliquePacking::of(j.at("s").get<int>(), j.at("k").get<int>(),
                             int_lists(j.at("blocks"), "blocks"));
}

json to_json(const RebalanceTrace& t) {
    json counters = json::array();
    for (const auto& [a, b] : t.counters)
        counters.push_back(json::array({a, b}));
    return json{{"counters", counters}, {"chosen_bag", t.chosen_bag}, {"target", t.target}};
}

json to_json(const FamilySpec& f) {
    json members = json::array();
    for (int i = 0; i < f.t(); ++i)
        members.push_back(json{{"name", member_name(f, i)},
                               {"graph6", to_graph6(f.members[i])}});
    return json{{"n", f.n()}, {"t", f.t()}, {"members", members}};
}

FamilySpec family_from_json(const json& j) {
    std::vector<Graph> members;
    for (const auto& m : j.at("members"))
        members.push_back(
            from_graph6(m.at("graph6").get<std::string>(), m.value("name", "")));
    return FamilySpec::of(std::move(members));
}

json universal_sidecar(const UniversalGraph& u) {
    json embeddings = json::object();
    for (const auto& [name, map] : u.embeddings)
        embeddings[name] = map.image;
    json construction{{"scheme", u.construction.scheme}, {"n", u.construction.n},
                      {"k", u.construction.k},           {"p", u.construction.p},
                      {"t", u.construction.t},           {"s", u.construction.s}};
    return json{{"construction", construction}, {"embeddings", embeddings}};
}

UniversalGraph universal_from_parts(Graph host, const json& sidecar) {
    UniversalGraph u;
    u.host = std::move(host);
    const json& c = sidecar.at("construction");
    u.construction = {c.at("scheme").get<std::string>(), c.at("n").get<int>(),
                      c.at("k").get<int>(),              c.at("p").get<int>(),
                      c.at("t").get<int>(),              c.at("s").get<int>()};
    for (const auto& [name, image] : sidecar.at("embeddings").items()) {
        VertexMap m;
        m.image = image.get<std::vector<int>>();
        u.embeddings.emplace(name, std::move(m));
    }
    return u;
}

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw parameter_error("cannot open json file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw parameter_error("malformed json in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw parameter_error("cannot write json file: " + path);
    out << j.dump(2) << '\n';
}

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace universo
