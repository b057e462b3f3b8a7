#include <stdio.h>
#include <string.h>

#include "umbral.h"

int main(void) {
    UmbralPsi *psi = NULL;
    if (umbral_psi_builtin("qgauss", 12, &psi) != UMBRAL_STATUS_OK) return 1;

    char *s = NULL;
    if (umbral_psi_number(psi, 3, &s) != UMBRAL_STATUS_OK) return 2;
    if (strcmp(s, "1+q+q^2") != 0) return 3;
    umbral_string_free(s);

    UmbralPolys *polys = NULL;
    if (umbral_basic_sequence(psi, UMBRAL_DELTA_LAGUERRE, 3, UMBRAL_METHOD_SOLVE, &polys) != UMBRAL_STATUS_OK) return 4;
    if (umbral_polys_coeff(polys, 2, 1, &s) != UMBRAL_STATUS_OK) return 5;
    if (strcmp(s, "-1-q") != 0) return 6;
    umbral_string_free(s);
    umbral_polys_free(polys);

    UmbralPsi *bad = NULL;
    if (umbral_psi_builtin("nope", 8, &bad) != UMBRAL_STATUS_INVALID_PSI) return 7;
    if (strstr(umbral_last_error(), "qgauss") == NULL) return 8;

    UmbralWeyl *w = NULL;
    bool pass = false;
    if (umbral_weyl_build(4, &w) != UMBRAL_STATUS_OK) return 9;
    if (umbral_weyl_check(w, 1e-10, &pass, &s) != UMBRAL_STATUS_OK || !pass) return 10;
    umbral_string_free(s);
    umbral_weyl_free(w);

    umbral_psi_free(psi);
    puts("ok");
    return 0;
}
