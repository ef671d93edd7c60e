/* Copyright 2026 The saddlebos Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Builds against the public header as plain C and runs the parallel-feet
 * example through the shared library. */

#include <math.h>
#include <stdio.h>

#include "saddlebos/saddlebos.h"

int main(void) {
  const double half_pi = 1.57079632679489661923;
  sb_foot_pose left = {{0.0, 0.15}, half_pi, 0.25, 0.10};
  sb_foot_pose right = {{0.0, -0.15}, half_pi, 0.25, 0.10};
  sb_boundary* b = NULL;
  sb_bos_params p;
  sb_point top;

  if (sb_boundary_create(&left, &right, SB_MODE_CONTINUOUS, &b) != SB_OK) {
    fprintf(stderr, "create: %s\n", sb_last_error_message());
    return 1;
  }
  if (sb_boundary_params(b, &p) != SB_OK || sb_boundary_point(b, half_pi, &top) != SB_OK) {
    sb_boundary_destroy(b);
    return 1;
  }
  sb_boundary_destroy(b);
  if (fabs(p.d_Ly - 0.20) > 1e-12 || fabs(top.y - 0.20) > 1e-9) {
    fprintf(stderr, "unexpected d_Ly=%.17g top.y=%.17g\n", p.d_Ly, top.y);
    return 1;
  }
  printf("c consumer ok (saddlebos %s)\n", sb_version());
  return 0;
}
