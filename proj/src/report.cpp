#include "etale/report.hpp"

#include <json.hpp>

namespace etale {

namespace {

using Json = nlohmann::ordered_json;

const char* yes_no(bool b) { return b ? "true" : "false"; }

bool shows(Section section, std::initializer_list<Section> where) {
    if (section == Section::Full) return true;
    for (Section s : where)
        if (s == section) return true;
    return false;
}

std::vector<std::string> certificate_names(Section section) {
    switch (section) {
        case Section::Nette: return {"trivial", "nette"};
        case Section::Smooth: return {"trivial", "standard-smooth", "elementary-smooth"};
        case Section::Etale: return {"trivial", "standard-etale"};
        case Section::Decompose: return {"trivial", "decomposition"};
        case Section::Full: break;
    }
    return {"trivial", "nette", "standard-smooth", "elementary-smooth", "standard-etale", "decomposition"};
}

std::string indent(const std::string& text, const std::string& pad) {
    std::string out = pad;
    for (char c : text) {
        out += c;
        if (c == '\n') out += pad;
    }
    while (!out.empty() && (out.back() == ' ')) out.pop_back();
    if (!out.empty() && out.back() != '\n') out += '\n';
    return out;
}

Json coordinates_json(const Field& k, const Vector& v) {
    Json arr = Json::array();
    for (const auto& c : v) arr.push_back(k.to_string(c));
    return arr;
}

}  // namespace

std::string render_text(const ClassificationReport& r, Section section) {
    const Field& k = r.field;
    std::string out;
    if (section == Section::Full) out += "input:\n" + indent(r.input, "  ");
    out += std::string("trivial: ") + yes_no(r.trivial) + "\n";
    if (shows(section, {Section::Nette})) out += std::string("nette: ") + yes_no(r.nette) + "\n";
    if (shows(section, {Section::Smooth})) {
        out += std::string("standard-smooth: ") + yes_no(r.standard_smooth) + "\n";
        out += std::string("elementary-smooth: ") + yes_no(r.elementary_smooth) + "\n";
    }
    if (shows(section, {Section::Etale})) {
        out += std::string("standard-etale: ") + yes_no(r.standard_etale) + "\n";
        out += "noether_dimension: " + std::to_string(r.noether_dimension) + "\n";
        if (r.vector_space_dimension) {
            out += "vector_space_dimension: " + std::to_string(*r.vector_space_dimension) + "\n";
            if (!r.basis_labels.empty()) {
                out += "basis:";
                for (std::size_t i = 0; i < r.basis_labels.size(); ++i) out += (i ? ", " : " ") + r.basis_labels[i];
                out += "\n";
            }
        }
        if (r.discriminant) out += "discriminant: " + k.to_string(*r.discriminant) + "\n";
    }
    if (shows(section, {Section::Etale, Section::Decompose})) out += std::string("etale: ") + yes_no(r.etale) + "\n";
    if (shows(section, {Section::Decompose}) && r.etale && !r.trivial) {
        out += "decomposition:\n";
        for (const auto& g : r.decomposition) out += "  " + g.to_string() + "\n";
        if (r.primitive_element)
            out += "primitive_element: " + r.primitive_element->expression + " with minimal polynomial " +
                   r.primitive_element->minimal_polynomial.to_string() + "\n";
    }
    if (shows(section, {Section::Etale}) && r.nilpotent_witness)
        out += "nilpotent_witness: " + r.nilpotent_witness->expression + "\n";
    if (!r.notes.empty()) {
        out += "notes:\n";
        for (const auto& n : r.notes) out += "  - " + n + "\n";
    }
    if (!r.certificates.empty()) {
        std::string certs;
        for (const auto& name : certificate_names(section))
            for (const auto& [key, text] : r.certificates)
                if (key == name) certs += "  [" + key + "]\n" + indent(text, "    ");
        if (!certs.empty()) out += "certificates:\n" + certs;
    }
    return out;
}

std::string render_json(const ClassificationReport& r, Section section) {
    const Field& k = r.field;
    Json j;
    if (section == Section::Full) j["input"] = r.input;
    j["trivial"] = r.trivial;
    if (shows(section, {Section::Nette})) j["nette"] = r.nette;
    if (shows(section, {Section::Smooth})) {
        j["standard_smooth"] = r.standard_smooth;
        j["elementary_smooth"] = r.elementary_smooth;
    }
    if (shows(section, {Section::Etale})) {
        j["standard_etale"] = r.standard_etale;
        j["noether_dimension"] = r.noether_dimension;
        j["vector_space_dimension"] =
            r.vector_space_dimension ? Json(*r.vector_space_dimension) : Json(nullptr);
        j["discriminant"] = r.discriminant ? Json(k.to_string(*r.discriminant)) : Json(nullptr);
    }
    if (shows(section, {Section::Etale, Section::Decompose})) j["etale"] = r.etale;
    if (shows(section, {Section::Decompose})) {
        Json dec = Json::array();
        for (const auto& g : r.decomposition) dec.push_back(g.to_string());
        j["decomposition"] = dec;
        if (r.primitive_element) {
            j["primitive_element"] = {{"element", r.primitive_element->expression},
                                      {"coordinates", coordinates_json(k, r.primitive_element->coordinates)},
                                      {"minimal_polynomial", r.primitive_element->minimal_polynomial.to_string()}};
        } else {
            j["primitive_element"] = nullptr;
        }
    }
    if (shows(section, {Section::Etale})) {
        if (r.nilpotent_witness)
            j["nilpotent_witness"] = {{"element", r.nilpotent_witness->expression},
                                      {"coordinates", coordinates_json(k, r.nilpotent_witness->coordinates)}};
        else
            j["nilpotent_witness"] = nullptr;
    }
    j["notes"] = r.notes;
    if (!r.certificates.empty()) {
        Json certs = Json::object();
        for (const auto& name : certificate_names(section))
            for (const auto& [key, text] : r.certificates)
                if (key == name) certs[key] = text;
        j["certificates"] = certs;
    }
    return j.dump(2) + "\n";
}

DifferentialsReport differentials(const AlgebraPresentation& presentation, std::size_t pair_budget) {
    DifferentialsReport rep{omega_presentation(presentation), std::nullopt};
    GroebnerBasis basis = relation_basis(presentation, pair_budget);
    if (contains_one(basis) || noether_dimension(basis) == 0) rep.omega_dimension = omega_dimension(presentation, basis);
    return rep;
}

namespace {

std::string relation_text(const DifferentialPresentation& d, std::size_t j) {
    std::string out;
    for (std::size_t i = 0; i < d.generators.size(); ++i) {
        const MultiPoly& c = d.relation_table[i][j];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += (c.is_one() ? "" : "(" + c.to_string() + ")*") + d.generators[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string render_text(const DifferentialsReport& r) {
    const DifferentialPresentation& d = r.presentation;
    std::string out = "generators:";
    for (std::size_t i = 0; i < d.generators.size(); ++i) out += (i ? ", " : " ") + d.generators[i];
    out += "\nrelations:\n";
    for (std::size_t j = 0; j < d.ambient.nrelations(); ++j) out += "  " + relation_text(d, j) + "\n";
    out += "omega_dimension: " + (r.omega_dimension ? std::to_string(*r.omega_dimension) : "infinite") + "\n";
    return out;
}

std::string render_json(const DifferentialsReport& r) {
    const DifferentialPresentation& d = r.presentation;
    Json table = Json::array();
    for (const auto& row : d.relation_table) {
        Json jr = Json::array();
        for (const auto& e : row) jr.push_back(e.to_string());
        table.push_back(jr);
    }
    Json rels = Json::array();
    for (std::size_t j = 0; j < d.ambient.nrelations(); ++j) rels.push_back(relation_text(d, j));
    Json j;
    j["generators"] = d.generators;
    j["relation_table"] = table;
    j["relations"] = rels;
    j["omega_dimension"] = r.omega_dimension ? Json(*r.omega_dimension) : Json(nullptr);
    return j.dump(2) + "\n";
}

}  // namespace etale
