/* Keccak-256 (original padding, pad byte 0x01) as a CPython extension.
 *
 * This is the pre-NIST Keccak used for content addressing throughout this
 * package; it differs from hashlib's sha3_256 only in the domain padding
 * byte (0x01 vs 0x06).  Validated against the widely published vectors:
 *   keccak256("")     = c5d2460186f7233c927e7db2dcc703c0e500b653ca82273b7bfad8045d85a470
 *   keccak256("abc")  = 4e03657aea45a94fc7d47ba826c8d667c0d1e6e33a64a036ec44f58fa12d6c45
 *   keccak256("\x80") = 56e81f171bcc55a6ff8345e692c0f86e5b48e01b996cadc001622fb5e363b421
 */
#define PY_SSIZE_T_CLEAN
#include <Python.h>
#include <stdint.h>
#include <string.h>

#define KECCAK_RATE 136 /* 1088-bit rate for 256-bit output */

static const uint64_t KECCAK_RC[24] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

/* rotation offsets indexed by lane = x + 5*y */
static const int KECCAK_RHO[25] = {
    0,  1,  62, 28, 27, 36, 44, 6,  55, 20, 3,  10, 43,
    25, 39, 41, 45, 15, 21, 8,  18, 2,  61, 56, 14,
};

#define ROTL64(v, n) (((v) << (n)) | ((v) >> ((64 - (n)) & 63)))

static void
keccak_f1600(uint64_t A[25])
{
    uint64_t B[25], C[5], D[5];
    int rnd, x, y, i;

    for (rnd = 0; rnd < 24; rnd++) {
        for (x = 0; x < 5; x++)
            C[x] = A[x] ^ A[x + 5] ^ A[x + 10] ^ A[x + 15] ^ A[x + 20];
        for (x = 0; x < 5; x++)
            D[x] = C[(x + 4) % 5] ^ ROTL64(C[(x + 1) % 5], 1);
        for (i = 0; i < 25; i++)
            A[i] ^= D[i % 5];
        for (x = 0; x < 5; x++) {
            for (y = 0; y < 5; y++) {
                i = x + 5 * y;
                B[y + 5 * ((2 * x + 3 * y) % 5)] = ROTL64(A[i], KECCAK_RHO[i]);
            }
        }
        for (x = 0; x < 5; x++) {
            for (y = 0; y < 5; y++) {
                i = x + 5 * y;
                A[i] = B[i] ^ ((~B[(x + 1) % 5 + 5 * y]) & B[(x + 2) % 5 + 5 * y]);
            }
        }
        A[0] ^= KECCAK_RC[rnd];
    }
}

static void
absorb_block(uint64_t A[25], const uint8_t *p)
{
    int i;
    for (i = 0; i < KECCAK_RATE / 8; i++) {
        A[i] ^= (uint64_t)p[8 * i] | ((uint64_t)p[8 * i + 1] << 8) |
                ((uint64_t)p[8 * i + 2] << 16) | ((uint64_t)p[8 * i + 3] << 24) |
                ((uint64_t)p[8 * i + 4] << 32) | ((uint64_t)p[8 * i + 5] << 40) |
                ((uint64_t)p[8 * i + 6] << 48) | ((uint64_t)p[8 * i + 7] << 56);
    }
    keccak_f1600(A);
}

static PyObject *
keccak256(PyObject *self, PyObject *args)
{
    Py_buffer buf;
    uint64_t A[25];
    uint8_t last[KECCAK_RATE];
    uint8_t out[32];
    const uint8_t *data;
    Py_ssize_t len, off;
    int i;

    if (!PyArg_ParseTuple(args, "y*:keccak256", &buf))
        return NULL;
    data = (const uint8_t *)buf.buf;
    len = buf.len;

    memset(A, 0, sizeof(A));
    for (off = 0; len - off >= KECCAK_RATE; off += KECCAK_RATE)
        absorb_block(A, data + off);

    memset(last, 0, sizeof(last));
    memcpy(last, data + off, (size_t)(len - off));
    last[len - off] = 0x01;
    last[KECCAK_RATE - 1] |= 0x80;
    absorb_block(A, last);

    for (i = 0; i < 4; i++) {
        out[8 * i] = (uint8_t)(A[i]);
        out[8 * i + 1] = (uint8_t)(A[i] >> 8);
        out[8 * i + 2] = (uint8_t)(A[i] >> 16);
        out[8 * i + 3] = (uint8_t)(A[i] >> 24);
        out[8 * i + 4] = (uint8_t)(A[i] >> 32);
        out[8 * i + 5] = (uint8_t)(A[i] >> 40);
        out[8 * i + 6] = (uint8_t)(A[i] >> 48);
        out[8 * i + 7] = (uint8_t)(A[i] >> 56);
    }
    PyBuffer_Release(&buf);
    return PyBytes_FromStringAndSize((const char *)out, 32);
}

static PyMethodDef keccak_methods[] = {
    {"keccak256", keccak256, METH_VARARGS,
     "keccak256(data) -> 32-byte digest (original Keccak padding)"},
    {NULL, NULL, 0, NULL},
};

static struct PyModuleDef keccak_module = {
    PyModuleDef_HEAD_INIT, "_keccak", "Keccak-256 core", -1, keccak_methods,
};

PyMODINIT_FUNC
PyInit__keccak(void)
{
    return PyModule_Create(&keccak_module);
}
