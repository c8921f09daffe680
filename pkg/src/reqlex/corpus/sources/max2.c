/* io: inputs=2 outputs=1 */
#include <stdio.h>
int main()
{
    int a, b, best;
    scanf("%d %d", &a, &b);
    best = a;
    if (b > best)
        best = b;
    if (best > 100)
        printf("large maximum\n");
    if (best < 0)
        printf("negative maximum\n");
    printf("max = %d\n", best);
    return 0;
}
