#pragma once

#include <json.hpp>

#include "ricci/antitree.hpp"
#include "ricci/curvature.hpp"
#include "ricci/graph.hpp"
#include "ricci/rational.hpp"
#include "ricci/sharpness.hpp"
#include "ricci/transport.hpp"

namespace ricci {

// All machine output uses ordered JSON with rationals serialized as canonical
// strings ("p/q", or "p" when integral); floating point appears only in the
// clearly-labeled "approximate" fields added when decimal display is on.
using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r, bool decimal);
Json graph_json(const Graph& g);
Json affine_form_json(int level, const AffineForm& f);
Json transport_json(const TransportResult& r, bool decimal);
Json curvature_report_json(const CurvatureReport& report, bool decimal);
Json sharpness_json(const SharpnessVerdict& v, bool decimal);
Json classification_json(const ClassificationReport& report);
Json lemma_report_json(const LemmaReport& report);
Json scan_json(const ScanResult& result, bool decimal);
Json family_lemma_json(const FamilyLemmaReport& report);
Json cross_validation_json(const CrossValidationReport& report);

}  // namespace ricci
