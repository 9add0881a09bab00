#include "qwords/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qwords {

void CertificateReport::add(const std::string& name, Ternary result) {
  items.push_back({name, result});
  if (result == Ternary::kFalse) verdict = Ternary::kFalse;
  if (result == Ternary::kUnknown && verdict == Ternary::kTrue)
    verdict = Ternary::kUnknown;
}

namespace {

bool within(double length, double bound) { return length <= bound + 1e-9; }

Word substitute_names(const std::map<std::string, Word>& theta,
                      const Word& pattern, const AlphabetRef& target) {
  Word out = Word::empty(target);
  for (const auto& l : pattern.letters()) {
    auto it = theta.find(pattern.alphabet()->name(l.symbol));
    if (it == theta.end())
      throw std::invalid_argument("certificate: labelling missing symbol " +
                                  pattern.alphabet()->name(l.symbol));
    out = out * (l.sign == 1 ? it->second : it->second.inverse());
  }
  return out;
}

Ternary specialisation_of_some_form(const Word& u, HalfInt n, bool orientable,
                                    const std::optional<Word>& ancestor) {
  Word u_canon = canonicalize(u);
  if (ancestor) {
    if (!is_wicks_form(*ancestor, n)) return Ternary::kFalse;
    if (is_orientable(*ancestor) != orientable) return Ternary::kFalse;
    auto specs = specialisations(*ancestor);
    return ternary_of(std::find(specs.begin(), specs.end(), u_canon) !=
                      specs.end());
  }
  // No ancestor given: enumeration is feasible only for small genus.
  if (n > HalfInt(1) + (orientable ? HalfInt(0) : HalfInt::half()))
    return Ternary::kUnknown;
  for (const auto& form : enumerate_wicks(n, orientable)) {
    auto specs = specialisations(form.word);
    if (std::find(specs.begin(), specs.end(), u_canon) != specs.end())
      return Ternary::kTrue;
  }
  return Ternary::kFalse;
}

Ternary verify_v1(const Word& h, const GenusCertificate& cert,
                  const GroupOracle& oracle, CertificateReport& report) {
  const CertificateV1& c = *cert.v1;
  Constants consts = oracle.constants(cert.genus);
  report.add("form is a Wicks form of the claimed genus",
             is_wicks_form(c.form, cert.genus));
  report.add("form orientability matches",
             is_quadratic(c.form) && is_orientable(c.form) == cert.orientable);

  bool nonempty = true;
  double letter_bound = consts.letter_bound();
  bool bounded = true;
  long total = 0;
  for (int sym : support(c.form)) {
    auto it = c.labelling.find(c.form.alphabet()->name(sym));
    if (it == c.labelling.end() || it->second.is_empty()) nonempty = false;
    if (it != c.labelling.end()) {
      bounded = bounded && within(it->second.size(), letter_bound);
      total += it->second.size();
    }
  }
  report.add("labelling images non-empty", nonempty);
  report.add("per-letter length bound", bounded);
  if (!nonempty) return report.verdict;

  Word written = substitute_names(c.labelling, c.form, oracle.generators());
  report.add("substitution cancellation-free",
             is_cyclically_reduced(written) && written.size() == 2 * total);

  Word conjugated = c.conjugator * written * c.conjugator.inverse();
  report.add("element equals conjugated form image",
             oracle.are_equal(h, conjugated));
  double rbound = oracle.minimal_length(h) / 2.0 + 6 * consts.l +
                  1.5 * consts.M + 2 * consts.delta.to_double() + 3.5;
  report.add("conjugator length bound", within(c.conjugator.size(), rbound));
  return report.verdict;
}

Ternary verify_v2(const Word& h, const GenusCertificate& cert,
                  const GroupOracle& oracle, const SearchBudget& budget,
                  CertificateReport& report) {
  const CertificateV2& c = *cert.v2;
  Constants consts = oracle.constants(cert.genus);
  const Extension& ext = c.extension;

  report.add("specialisation matches extension base word",
             c.specialisation == ext.graph.base_word());
  if (!is_quadratic(c.specialisation) || c.specialisation.is_empty()) {
    report.add("specialisation quadratic", false);
    return report.verdict;
  }
  report.add("specialisation quadratic", true);
  HalfInt k = graph_genus(c.specialisation);
  HalfInt g = ext.total_genus();
  report.add("genus split n = g + k", cert.genus == g + k);
  report.add("partition covers the vertices", ext.partition_covers_vertices());
  report.add("extension orientability matches",
             ext.orientable() == cert.orientable);

  report.add("specialisation descends from a genus-n form",
             specialisation_of_some_form(c.specialisation, cert.genus,
                                         cert.orientable, c.ancestor_form));

  LabellingReport lab =
      validate_labelling_report(ext.graph, ext.labelling, oracle);
  report.add("labelling images H-minimal", lab.non_minimal.empty());
  report.add("doubled-pair relations hold", lab.bad_relations.empty());
  report.add("labelled Hamiltonian cycle reduced as written",
             lab.hamiltonian_reduced);

  for (const auto& cls : ext.partition) {
    std::string name = "joint extension on {";
    for (size_t i = 0; i < cls.vertices.size(); ++i)
      name += (i ? "," : "") + std::to_string(cls.vertices[i]);
    name += "} has genus " + cls.genus.str();
    report.add(name, check_joint_extension(ext, cls.vertices, oracle, budget));
  }

  double len_bound = 2.0 * consts.K * consts.letter_bound();
  report.add("extension length bound", within(extension_length(ext), len_bound));

  Word f = hamiltonian_label(ext);
  report.add("Hamiltonian label H-minimal", oracle.is_minimal(f));
  Word conjugated = c.conjugator * f * c.conjugator.inverse();
  report.add("element equals conjugated Hamiltonian label",
             oracle.are_equal(h, conjugated));
  double rbound =
      oracle.minimal_length(h) / 2.0 + 2 * consts.delta.to_double();
  report.add("conjugator length bound", within(c.conjugator.size(), rbound));
  return report.verdict;
}

}  // namespace

Ternary verify_certificate(const Word& h, const GenusCertificate& cert,
                           const GroupOracle& oracle,
                           const SearchBudget& budget,
                           CertificateReport* report) {
  CertificateReport local;
  CertificateReport& rep = report ? *report : local;
  if (cert.variant == 1) {
    if (!cert.v1)
      throw std::invalid_argument("certificate: variant 1 data missing");
    if (cert.orientable && !cert.genus.is_integer())
      throw std::invalid_argument("certificate: orientable genus not integral");
    return verify_v1(h, cert, oracle, rep);
  }
  if (cert.variant == 2) {
    if (!cert.v2)
      throw std::invalid_argument("certificate: variant 2 data missing");
    return verify_v2(h, cert, oracle, budget, rep);
  }
  throw std::invalid_argument("certificate: unknown variant");
}

namespace {

// Variant-1 search over a finite backend: labellings with images drawn
// from the letter-bound ball.
SearchResult search_v1_finite(const Word& h, HalfInt n, bool orientable,
                              const GroupOracle& oracle,
                              const SearchBudget& budget) {
  SearchResult result;
  Constants consts = oracle.constants(n);
  std::vector<Word> ball = oracle.ball(static_cast<int>(
      std::floor(consts.letter_bound() + 1e-9)));
  std::vector<Word> images;
  for (const auto& w : ball)
    if (!w.is_empty()) images.push_back(w);

  bool truncated = false;
  for (const auto& form : enumerate_wicks(n, orientable)) {
    auto supp = support(form.word);
    double combos = 1;
    for (size_t i = 0; i < supp.size(); ++i)
      combos *= static_cast<double>(images.size());
    if (combos > static_cast<double>(budget.max_candidates)) {
      truncated = true;
      continue;
    }
    std::vector<int> idx(supp.size(), 0);
    while (true) {
      std::map<std::string, Word> theta;
      std::map<int, Word> theta_by_sym;
      for (size_t i = 0; i < supp.size(); ++i) {
        theta[form.word.alphabet()->name(supp[i])] = images[idx[i]];
        theta_by_sym[supp[i]] = images[idx[i]];
      }
      Word written = substitute(theta_by_sym, form.word, oracle.generators());
      long total = 0;
      for (const auto& [sym, img] : theta_by_sym) total += img.size();
      if (is_cyclically_reduced(written) &&
          written.size() == 2 * total) {
        auto conj = oracle.are_conjugate(oracle.minimal_form(h),
                                         oracle.minimal_form(written));
        double rbound = oracle.minimal_length(h) / 2.0 + 6 * consts.l +
                        1.5 * consts.M + 2 * consts.delta.to_double() + 3.5;
        if (conj && within(conj->size(), rbound)) {
          GenusCertificate cert;
          cert.variant = 1;
          cert.genus = n;
          cert.orientable = orientable;
          cert.v1 = CertificateV1{form.word, theta, *conj};
          result.status = Ternary::kTrue;
          result.certificate = cert;
          return result;
        }
      }
      size_t i = 0;
      while (i < idx.size() && ++idx[i] == static_cast<int>(images.size()))
        idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  result.status = truncated ? Ternary::kUnknown : Ternary::kFalse;
  return result;
}

}  // namespace

SearchResult search_genus(const Word& h, HalfInt n, bool orientable,
                          const GroupOracle& oracle,
                          const SearchBudget& budget) {
  SearchResult result;
  if (orientable && !n.is_integer())
    throw std::invalid_argument("search_genus: orientable genus not integral");

  if (!oracle.order()) {
    Word r = free_reduce(h);
    std::map<int, int> sums;
    for (const auto& l : r.letters()) sums[l.symbol] += l.sign;
    for (const auto& [sym, s] : sums) {
      if (orientable ? s != 0 : s % 2 != 0) {
        result.status = Ternary::kFalse;  // abelianization obstruction
        return result;
      }
    }
    Constants consts = oracle.constants(n);
    for (const auto& form : enumerate_wicks(n, orientable)) {
      auto m = match_wicks(r, form);
      bool mirrored = false;
      if (!m) {
        WicksForm inv{form.word.inverse(), form.genus, form.orientable};
        m = match_wicks(r, inv);
        mirrored = true;
      }
      if (!m) continue;
      bool bounded = true;
      std::map<std::string, Word> labelling;
      for (const auto& [sym, img] : m->theta) {
        bounded = bounded && within(img.size(), consts.letter_bound());
        labelling[form.word.alphabet()->name(sym)] = img;
      }
      if (!bounded) {
        result.status = Ternary::kUnknown;  // only oversized matches found
        return result;
      }
      GenusCertificate cert;
      cert.variant = 1;
      cert.genus = n;
      cert.orientable = orientable;
      cert.v1 = CertificateV1{
          mirrored ? form.word.inverse() : form.word, labelling,
          m->conjugator};
      result.status = Ternary::kTrue;
      result.certificate = cert;
      return result;
    }
    result.status = Ternary::kFalse;  // matching is complete over F(X)
    return result;
  }
  return search_v1_finite(h, n, orientable, oracle, budget);
}

}  // namespace qwords
