#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "divgraph/element.hpp"

namespace divgraph {

enum class Status { Holds, Fails, Inconclusive };

/// Where a verdict came from: the window graph, an analytic model argument,
/// or a bounded search.
enum class Provenance { Graph, Analytic, Searched };

std::string_view status_name(Status s);
std::string_view provenance_name(Provenance p);

/// a/b = (product of numerator atoms) / (product of denominator atoms).
struct Certificate {
  Element a;
  Element b;
  std::vector<Element> numerator_atoms;
  std::vector<Element> denominator_atoms;
};

struct Witness {
  Element element;
  std::string reason;
  /// Factorization lengths observed at the witness, when relevant.
  std::vector<std::size_t> lengths;
  /// Vertex labels of a supporting path, when relevant.
  std::vector<std::string> path;
};

/// Per-element evidence inside a window-wide certificate: `atoms` (or the
/// single `multiplier`) times `element` gives `product`, which is atomic.
struct ElementCertificate {
  Element element;
  std::vector<Element> atoms;
  std::optional<Element> multiplier;
  Element product;
  Provenance provenance = Provenance::Searched;
};

struct WindowCertificate {
  std::string summary;
  std::vector<ElementCertificate> elements;
};

/// Why a window could not decide a property.
struct BoundaryReason {
  std::string reason;
  std::size_t bound = 0;
  std::optional<Element> element;
  std::vector<std::string> path;
};

using Evidence = std::variant<Certificate, Witness, WindowCertificate, BoundaryReason>;

struct Verdict {
  Status status;
  Provenance provenance;
  Evidence evidence;

  bool holds() const { return status == Status::Holds; }
  bool fails() const { return status == Status::Fails; }
  /// Requires the evidence to be a Witness.
  const Witness& witness() const { return std::get<Witness>(evidence); }
};

}  // namespace divgraph
