#include "qwords/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qwords {

namespace {

using nlohmann::json;

json extension_json(const Extension& ext) {
  json doc;
  doc["base_word"] = ext.graph.base_word().str();
  json cycles = json::object();
  for (int v = 0; v < static_cast<int>(ext.graph.cycles.size()); ++v) {
    json syms = json::array();
    for (int sym : ext.graph.cycles[v])
      syms.push_back(ext.graph.full_alphabet->name(sym));
    cycles[std::to_string(v)] = syms;
  }
  doc["cycles"] = cycles;
  json lab = json::object();
  for (const auto& [name, img] : ext.labelling.images) lab[name] = img.str();
  doc["labelling"] = lab;
  json classes = json::array();
  for (const auto& cls : ext.partition) {
    json c;
    c["vertices"] = cls.vertices;
    c["genus"] = cls.genus.str();
    c["orientable"] = cls.orientable;
    classes.push_back(c);
  }
  doc["partition"] = classes;
  return doc;
}

HalfInt parse_genus(const json& j) {
  std::optional<HalfInt> g;
  if (j.is_number_integer())
    g = HalfInt(j.get<int>());
  else if (j.is_number_float())
    g = HalfInt::parse(std::to_string(j.get<double>()));
  else
    g = HalfInt::parse(j.get<std::string>());
  if (!g) throw std::invalid_argument("bad genus value in document");
  return *g;
}

Extension extension_from(const json& doc, const AlphabetRef& generators) {
  Word base =
      Word::parse(inferred_alphabet(doc.at("base_word").get<std::string>()),
                  doc.at("base_word").get<std::string>());
  DoubledGraph doubled = double_edges(base);

  std::vector<std::vector<std::string>> names(doubled.base.vertex_count);
  for (const auto& [key, syms] : doc.at("cycles").items()) {
    int v = std::stoi(key);
    if (v < 0 || v >= doubled.base.vertex_count)
      throw std::invalid_argument("extension document: no vertex " + key);
    for (const auto& s : syms) names[v].push_back(s.get<std::string>());
  }
  ExtendedGraph graph = insert_cycles_named(doubled, names);

  Extension ext{graph, {}, {}};
  for (const auto& [name, img] : doc.at("labelling").items())
    ext.labelling.images.emplace(name,
                                 Word::parse(generators, img.get<std::string>()));
  for (const auto& cls : doc.at("partition")) {
    ExtensionClass c;
    c.vertices = cls.at("vertices").get<std::vector<int>>();
    c.genus = parse_genus(cls.at("genus"));
    c.orientable = cls.value("orientable", true);
    ext.partition.push_back(c);
  }
  return ext;
}

json certificate_json(const GenusCertificate& cert) {
  json doc;
  doc["variant"] = cert.variant;
  doc["genus"] = cert.genus.str();
  doc["orientable"] = cert.orientable;
  if (cert.variant == 1) {
    doc["form"] = cert.v1->form.str();
    json lab = json::object();
    for (const auto& [name, img] : cert.v1->labelling) lab[name] = img.str();
    doc["labelling"] = lab;
    doc["conjugator"] = cert.v1->conjugator.str();
  } else {
    doc["specialisation"] = cert.v2->specialisation.str();
    if (cert.v2->ancestor_form)
      doc["ancestor_form"] = cert.v2->ancestor_form->str();
    doc["extension"] = extension_json(cert.v2->extension);
    doc["conjugator"] = cert.v2->conjugator.str();
  }
  return doc;
}

GenusCertificate certificate_from(const json& doc,
                                  const AlphabetRef& generators) {
  GenusCertificate cert;
  cert.variant = doc.at("variant").get<int>();
  cert.genus = parse_genus(doc.at("genus"));
  cert.orientable = doc.value("orientable", true);
  if (cert.variant == 1) {
    std::string form_text = doc.at("form").get<std::string>();
    CertificateV1 v1{Word::parse(inferred_alphabet(form_text), form_text),
                     {},
                     Word::parse(generators,
                                 doc.value("conjugator", std::string("1")))};
    for (const auto& [name, img] : doc.at("labelling").items())
      v1.labelling.emplace(name,
                           Word::parse(generators, img.get<std::string>()));
    cert.v1 = std::move(v1);
  } else if (cert.variant == 2) {
    Extension ext = extension_from(doc.at("extension"), generators);
    std::string spec_text = doc.at("specialisation").get<std::string>();
    CertificateV2 v2{Word::parse(inferred_alphabet(spec_text), spec_text),
                     std::nullopt, std::move(ext),
                     Word::parse(generators,
                                 doc.value("conjugator", std::string("1")))};
    if (doc.contains("ancestor_form")) {
      std::string a = doc.at("ancestor_form").get<std::string>();
      v2.ancestor_form = Word::parse(inferred_alphabet(a), a);
    }
    // The document's specialisation must be the extension's base word up
    // to the textual alphabet; keep words comparable.
    v2.specialisation =
        v2.specialisation.embed(v2.extension.graph.base_word().alphabet());
    cert.v2 = std::move(v2);
  } else {
    throw std::invalid_argument("certificate: unknown variant");
  }
  return cert;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json doc;
  in >> doc;
  return doc;
}

}  // namespace

std::string extension_to_json(const Extension& ext) {
  return extension_json(ext).dump(2);
}

Extension extension_from_json(const std::string& text,
                              const AlphabetRef& generators) {
  return extension_from(json::parse(text), generators);
}

std::string certificate_to_json(const GenusCertificate& cert) {
  return certificate_json(cert).dump(2);
}

GenusCertificate certificate_from_json(const std::string& text,
                                       const AlphabetRef& generators) {
  return certificate_from(json::parse(text), generators);
}

Extension load_extension(const std::string& path,
                         const AlphabetRef& generators) {
  return extension_from(read_json_file(path), generators);
}

GenusCertificate load_certificate(const std::string& path,
                                  const AlphabetRef& generators) {
  return certificate_from(read_json_file(path), generators);
}

}  // namespace qwords
