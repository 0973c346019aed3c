#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgc/classify.hpp"
#include "hgc/code.hpp"
#include "hgc/pluecker.hpp"
#include "hgc/verify.hpp"

namespace hgc::io {

enum class Format { csv, json };

/// Malformed input file.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormFile {
  int m = 0;
  int p = 0;
  int e = 0;
  std::vector<Elem> upper;
};

/// {"m":…, "p":…, "e":…, "upper":[S_01, S_02, …]}.  Throws FormatError on
/// missing keys, wrong length or entries outside the field.
FormFile read_form(std::istream& is);
FormFile read_form_file(const std::string& path);
void write_form(std::ostream& os, const FormFile& f);

void write_points(std::ostream& os, const Field& f, int m, std::span<const ProjectivePoint> pts, Format fmt);
void write_lines(std::ostream& os, const Field& f, int m, std::span<const IsotropicLine> lines, Format fmt);
/// "m p e N K" followed by K rows of N entries.
void write_genmat(std::ostream& os, const ProjectiveSystem& sys);

struct ParamsRow {
  int m, q;
  CodeParams params;
};
void write_params(std::ostream& os, const std::vector<ParamsRow>& rows, Format fmt);

/// The histogram part only, which is identical across runs with the same
/// configuration.  Timing goes to write_spectrum_meta.
void write_spectrum(std::ostream& os, const SpectrumReport& rep, const FormFile& instance, Format fmt);
void write_spectrum_meta(std::ostream& os, const SpectrumReport& rep);

void write_classification(std::ostream& os, const ClassificationReport& rep, Format fmt);
void write_bounds(std::ostream& os, const BoundTable& t, Format fmt);
void write_weights(std::ostream& os, const FormCheck& c, Format fmt);
void write_min_distance(std::ostream& os, const MinDistanceResult& r, const FormFile& instance, Format fmt);
void write_checks(std::ostream& os, const std::vector<CheckResult>& checks, Format fmt);

}  // namespace hgc::io
