// Iterated-kernel sweep: either a non-horizontal line crossing k regions,
// or a horizontal line crossing one critical region from every stage.
//
// Internally the plane is sheared so that the chosen generic direction
// (1, s) becomes horizontal; vertices then have pairwise distinct heights
// and no edge or ray is horizontal. An exterior region is split into
// convex pinwheel cells that keep the region's id.

#ifndef MOSER_SWEEP_H_
#define MOSER_SWEEP_H_

#include <string>
#include <vector>

#include "moser/exact.h"
#include "moser/parallel.h"
#include "moser/planar.h"

namespace moser {

struct SweepStage {
  std::string band_lo, band_hi;  // heights in sheared coordinates, "-inf"/"inf"
  int regions = 0;               // u_i, regions meeting the current kernel
  int critical = 0;              // c_i, regions meeting the current line
  int pieces = 0;                // polygons of the complement, 0 on the last stage
  int kernel_regions = 0;        // u_{i+1}
  PlanarLine line;               // L_i in original coordinates
};

struct StabCertificate {
  enum class Kind { kNonhorizontal, kHorizontal };

  PlanarLine line;
  int count = 0;  // stab_count of `line`, re-measured
  Kind kind = Kind::kNonhorizontal;
  std::vector<SweepStage> stages;
  int k = 0;
  int n = 0;
  int guarantee = 0;
  RVec2 horizontal;  // the generic direction, original coordinates
  bool convex_input = true;
  bool recurrence_ok = true;  // (3k-4) u_{i+1} >= u_i - (k-1) at every stage
  bool pieces_ok = true;      // at most 3c-1 polygons at every stage

  bool meets_guarantee() const { return count >= guarantee; }
};

const char* certificate_kind_name(StabCertificate::Kind kind);

// min(k, smallest m with (3k-4)^m (k-1) >= (3k-5) n).
int sweep_guarantee(int n, int k);

StabCertificate sweep_certificate(const PlanarSubdivision& s, int k = 5,
                                  Exec exec = Exec::kParallel);

struct CertificateCheck {
  bool count_matches = false;
  bool meets_guarantee = false;
  bool recurrence = false;
  std::string detail;
  bool ok() const { return count_matches && meets_guarantee && recurrence; }
};

// Re-measures the line and re-audits the stage trace.
CertificateCheck check_certificate(const PlanarSubdivision& s, const StabCertificate& c);

}  // namespace moser

#endif  // MOSER_SWEEP_H_
