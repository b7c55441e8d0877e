#include "ordring/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ordring/errors.hpp"

namespace ordring {

namespace {

using nlohmann::json;

GroupSpecPtr load_spec(const json& j) {
    std::string family = j.value("family", "");
    if (family == "free_abelian") return make_free_abelian(j.value("rank", 1));
    if (family == "rational_vector") return make_rational_vector(j.value("rank", 1));
    if (family == "free_group")
        return make_free_group(j.value("rank", 2), j.value("magnus_degree_bound", 8));
    if (family == "braid_b3") return make_braid_b3();
    if (family == "semidirect") {
        if (!j.contains("normal") || !j.contains("quotient") || !j.contains("action"))
            raise(errc::invalid_config, "semidirect config needs normal/quotient/action");
        GroupSpecPtr n = load_spec(j["normal"]);
        GroupSpecPtr q = load_spec(j["quotient"]);
        SemidirectAction act;
        const json& a = j["action"];
        if (a.contains("matrix")) {
            act.mat = a["matrix"].get<std::vector<std::vector<long>>>();
            if (!a.contains("matrix_inv"))
                raise(errc::invalid_config, "action needs matrix_inv");
            act.mat_inv = a["matrix_inv"].get<std::vector<std::vector<long>>>();
        } else if (a.contains("words")) {
            auto parse_words = [&](const json& arr) {
                std::vector<Word> ws;
                for (const auto& t : arr) {
                    GroupElement g = elem_parse(n, t.get<std::string>());
                    ws.push_back(g.word);
                }
                return ws;
            };
            act.words = parse_words(a["words"]);
            if (!a.contains("words_inv"))
                raise(errc::invalid_config, "action needs words_inv");
            act.words_inv = parse_words(a["words_inv"]);
        } else {
            raise(errc::invalid_config, "action needs matrix or words");
        }
        return make_semidirect(std::move(n), std::move(q), std::move(act));
    }
    raise(errc::invalid_config, "unknown family '" + family + "'");
}

FieldSpec load_field(const json& j) {
    if (!j.contains("field")) return FieldSpec{};
    const json& f = j["field"];
    std::string type = f.value("type", "Q");
    if (type == "Q") return FieldSpec{};
    if (type == "Fp") {
        FieldSpec fs{f.value("p", 0L)};
        if (fs.p < 2) raise(errc::invalid_config, "Fp field needs a modulus p >= 2");
        return fs;
    }
    raise(errc::invalid_config, "unknown field type '" + type + "'");
}

TwistData load_twist(const json& j, const GroupSpecPtr& spec, FieldSpec field) {
    if (!j.contains("eta")) return TwistData::trivial(field);
    const json& e = j["eta"];
    std::string type = e.value("type", "trivial");
    if (type == "trivial") return TwistData::trivial(field);
    if (type == "bilinear_q") {
        if (!is_abelian_vector(spec))
            raise(errc::invalid_config, "bilinear twists need an abelian vector group");
        Scalar q = Scalar::parse(e.value("q", "1"), field);
        auto matrix = e.at("matrix").get<std::vector<std::vector<long>>>();
        if (matrix.size() != static_cast<size_t>(spec->rank))
            raise(errc::invalid_config, "twist matrix must be rank x rank");
        for (const auto& row : matrix)
            if (row.size() != static_cast<size_t>(spec->rank))
                raise(errc::invalid_config, "twist matrix must be rank x rank");
        return TwistData::bilinear_q(std::move(q), std::move(matrix));
    }
    raise(errc::invalid_config, "unknown eta type '" + type + "'");
}

}  // namespace

CPRingPtr load_ring_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        raise(errc::invalid_config, std::string("config is not valid JSON: ") + e.what());
    }
    GroupSpecPtr spec = load_spec(j);
    FieldSpec field = load_field(j);
    TwistData twist = load_twist(j, spec, field);
    return make_cp_ring(std::move(spec), std::move(twist), field);
}

CPRingPtr load_ring_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(errc::invalid_config, "cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_ring_from_json(ss.str());
}

}  // namespace ordring
