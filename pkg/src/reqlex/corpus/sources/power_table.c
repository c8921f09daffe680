/* io: inputs=2 outputs=3 */
#include <stdio.h>
int power(int base, int exp)
{
    int result, i;
    if (exp < 0)
        return 0;
    result = 1;
    for (i = 0; i < exp; i = i + 1)
    {
        result = result * base;
    }
    return result;
}
void print_row(int row, int cols)
{
    int k, value;
    for (k = 1; k <= cols; k = k + 1)
    {
        value = power(row, k);
        printf("%d ", value);
    }
    printf("\n");
}
int main()
{
    int rows, cols, r;
    scanf("%d %d", &rows, &cols);
    if (rows > 12)
        rows = 12;
    for (r = 1; r <= rows; r = r + 1)
    {
        if (r % 2 == 1)
            printf("odd row: ");
        print_row(r, cols);
    }
    printf("done\n");
    return 0;
}
