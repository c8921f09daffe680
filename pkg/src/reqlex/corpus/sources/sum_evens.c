/* io: inputs=1 outputs=2 */
#include <stdio.h>
int main()
{
    int limit, i, total, evens;
    scanf("%d", &limit);
    if (limit < 0)
        limit = 0;
    total = 0;
    evens = 0;
    i = 1;
    while (i <= limit)
    {
        total = total + i;
        if (i % 2 == 0)
            evens = evens + 1;
        i = i + 1;
    }
    printf("sum = %d\n", total);
    printf("evens = %d\n", evens);
    return 0;
}
